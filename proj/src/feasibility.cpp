#include "nrcheck/feasibility.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "nrcheck/hamming.hpp"

namespace nrcheck {

namespace {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) { return -floor_div(-a, b); }

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

constexpr int kMaxPropagationRounds = 10000;
const BigInt kMaxEnumeration = BigInt(100'000'000);

}  // namespace

DistributionTemplate DistributionTemplate::parse(int length, const std::string& spec, bool antipodal) {
  if (length < 1) throw std::invalid_argument("template length must be positive");
  DistributionTemplate tmpl;
  tmpl.length = length;
  tmpl.antipodal = antipodal;
  tmpl.slots.assign(static_cast<std::size_t>(length + 1), BigInt(0));
  std::vector<bool> listed(static_cast<std::size_t>(length + 1), false);

  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("template entry needs '=': " + item);
    const std::string key = trim(item.substr(0, eq));
    const std::string value = trim(item.substr(eq + 1));
    int index = -1;
    auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), index);
    if (ec != std::errc{} || ptr != key.data() + key.size() || index < 0 || index > length) {
      throw std::invalid_argument("bad template index: " + key);
    }
    const auto slot = static_cast<std::size_t>(index);
    if (listed[slot]) throw std::invalid_argument("template index repeated: " + key);
    listed[slot] = true;
    if (value == "?") {
      tmpl.slots[slot] = std::nullopt;
    } else {
      if (value.empty() || !std::all_of(value.begin(), value.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw std::invalid_argument("template value must be a nonnegative integer or '?': " + value);
      }
      tmpl.slots[slot] = BigInt(value);
    }
  }

  if (antipodal) {
    for (int i = 0; i <= length; ++i) {
      const auto a = static_cast<std::size_t>(i);
      const auto b = static_cast<std::size_t>(length - i);
      if (listed[a] && !listed[b]) {
        tmpl.slots[b] = tmpl.slots[a];
      } else if (listed[a] && listed[b] && tmpl.slots[a] != tmpl.slots[b]) {
        throw std::invalid_argument("antipodal template entries " + std::to_string(i) + " and " +
                                    std::to_string(length - i) + " disagree");
      }
    }
  }
  return tmpl;
}

BigInt AffineForm::evaluate(const std::vector<BigInt>& values) const {
  BigInt sum = constant;
  for (std::size_t v = 0; v < coefficients.size(); ++v) sum += coefficients[v] * values[v];
  return sum;
}

std::string FeasibilitySystem::variable_name(std::size_t v) const {
  return "a" + std::to_string(variable_slots[v].front());
}

std::string FeasibilitySystem::render(const AffineForm& form) const {
  std::string out;
  if (form.constant != 0) out = form.constant.str();
  for (std::size_t v = 0; v < form.coefficients.size(); ++v) {
    const BigInt& c = form.coefficients[v];
    if (c == 0) continue;
    const BigInt magnitude = c < 0 ? BigInt(-c) : c;
    std::string term = (magnitude == 1 ? "" : magnitude.str() + "*") + variable_name(v);
    if (out.empty()) {
      out = (c < 0 ? "-" : "") + term;
    } else {
      out += (c < 0 ? " - " : " + ") + term;
    }
  }
  return out.empty() ? "0" : out;
}

FeasibilitySystem build_system(const DistributionTemplate& tmpl) {
  const int m = tmpl.length;
  if (static_cast<int>(tmpl.slots.size()) != m + 1) {
    throw std::invalid_argument("template must have m + 1 slots");
  }
  FeasibilitySystem sys;
  sys.length = m;

  // Resolve fixed values and variable ownership per slot.
  std::vector<std::optional<BigInt>> fixed(tmpl.slots.size());
  std::vector<int> owner(tmpl.slots.size(), -1);
  for (int i = 0; i <= m; ++i) {
    const auto a = static_cast<std::size_t>(i);
    const auto b = static_cast<std::size_t>(m - i);
    if (tmpl.slots[a]) {
      fixed[a] = tmpl.slots[a];
      if (tmpl.antipodal && tmpl.slots[b] && *tmpl.slots[b] != *tmpl.slots[a]) sys.consistent = false;
      continue;
    }
    if (tmpl.antipodal && tmpl.slots[b]) {
      fixed[a] = tmpl.slots[b];
      continue;
    }
    if (tmpl.antipodal && owner[b] >= 0) {
      owner[a] = owner[b];
      sys.variable_slots[static_cast<std::size_t>(owner[b])].push_back(i);
      continue;
    }
    owner[a] = static_cast<int>(sys.variable_slots.size());
    sys.variable_slots.push_back({i});
  }

  const KrawtchoukTable table(m);
  for (int k = 0; k <= m; ++k) {
    AffineForm row;
    row.constant = 0;
    row.coefficients.assign(sys.variable_slots.size(), BigInt(0));
    for (int i = 0; i <= m; ++i) {
      const auto a = static_cast<std::size_t>(i);
      if (fixed[a]) {
        row.constant += *fixed[a] * table.at(k, i);
      } else {
        row.coefficients[static_cast<std::size_t>(owner[a])] += table.at(k, i);
      }
    }
    sys.rows.push_back(std::move(row));
  }
  return sys;
}

std::optional<std::vector<VariableRange>> propagate_bounds(const std::vector<AffineForm>& rows,
                                                           std::size_t variable_count) {
  std::vector<VariableRange> box(variable_count, VariableRange{BigInt(0), std::nullopt});
  for (const AffineForm& row : rows) {
    const bool constant = std::all_of(row.coefficients.begin(), row.coefficients.end(), [](const BigInt& c) { return c == 0; });
    if (constant && row.constant < 0) return std::nullopt;
  }
  for (int round = 0;; ++round) {
    bool changed = false;
    for (const AffineForm& row : rows) {
      for (std::size_t v = 0; v < variable_count; ++v) {
        const BigInt& c = row.coefficients[v];
        if (c == 0) continue;
        // Largest value the rest of the row can take over the box.
        BigInt rest = row.constant;
        bool finite = true;
        for (std::size_t u = 0; u < variable_count && finite; ++u) {
          if (u == v) continue;
          const BigInt& cu = row.coefficients[u];
          if (cu > 0) {
            if (!box[u].high) {
              finite = false;
            } else {
              rest += cu * *box[u].high;
            }
          } else if (cu < 0) {
            rest += cu * box[u].low;
          }
        }
        if (!finite) continue;
        // c * x_v + rest >= 0 is needed for some admissible rest.
        if (c < 0) {
          const BigInt high = floor_div(rest, -c);
          if (!box[v].high || high < *box[v].high) {
            box[v].high = high;
            changed = true;
          }
        } else {
          const BigInt low = ceil_div(-rest, c);
          if (low > box[v].low) {
            box[v].low = low;
            changed = true;
          }
        }
        if (box[v].high && *box[v].high < box[v].low) return std::nullopt;
      }
    }
    if (!changed) break;
    // Without an upper bound somewhere a lower bound can creep forever.
    if (round >= kMaxPropagationRounds) break;
  }
  return box;
}

std::vector<std::vector<BigInt>> solve_rows(const std::vector<AffineForm>& rows,
                                            std::size_t variable_count) {
  auto box = propagate_bounds(rows, variable_count);
  if (!box) return {};
  BigInt volume = 1;
  for (std::size_t v = 0; v < variable_count; ++v) {
    if (!(*box)[v].high) {
      throw UnboundedSystemError("no constraint row bounds unknown #" + std::to_string(v));
    }
    volume *= *(*box)[v].high - (*box)[v].low + 1;
  }
  if (volume > kMaxEnumeration) {
    throw std::runtime_error("feasibility box has " + volume.str() + " points; too many to enumerate");
  }

  std::vector<std::vector<BigInt>> solutions;
  std::vector<BigInt> point(variable_count);
  for (std::size_t v = 0; v < variable_count; ++v) point[v] = (*box)[v].low;
  while (true) {
    if (std::all_of(rows.begin(), rows.end(), [&](const AffineForm& r) { return r.evaluate(point) >= 0; })) {
      solutions.push_back(point);
    }
    // Odometer step, last variable fastest.
    std::size_t v = variable_count;
    while (v > 0) {
      --v;
      if (point[v] < *(*box)[v].high) {
        ++point[v];
        break;
      }
      point[v] = (*box)[v].low;
      if (v == 0) return solutions;
    }
    if (variable_count == 0) return solutions;
  }
}

FeasibilityResult feasible_distributions(const DistributionTemplate& tmpl) {
  FeasibilityResult result;
  result.system = build_system(tmpl);
  if (!result.system.consistent) return result;
  result.solutions = solve_rows(result.system.rows, result.system.variable_slots.size());
  return result;
}

}  // namespace nrcheck
