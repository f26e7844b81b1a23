#pragma once

// Text and line-delimited JSON renderings of results. JSON objects use
// sorted keys, so records are byte-stable for identical inputs.

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "steinitz/affine.hpp"
#include "steinitz/descriptor_io.hpp"
#include "steinitz/field.hpp"
#include "steinitz/finite_ring.hpp"
#include "steinitz/subring_lattice.hpp"
#include "steinitz/verify.hpp"

namespace steinitz {

using Json = nlohmann::json;

inline Json count_record(const ExtendedCount& c) {
  if (c.is_finite()) return c.value();
  return c.to_string();
}

inline std::string describe(const Verdict& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, FinitelyMany>) {
          std::string out = "finitely many maximal subrings";
          if (x.field) out += "; ring = " + render(*x.field);
          if (x.count) out += "; count = " + x.count->to_string();
          return out;
        } else if constexpr (std::is_same_v<T, InfinitelyMany>) {
          return std::string("infinitely many maximal subrings (") + to_string(x.reason) + ")";
        } else if constexpr (std::is_same_v<T, NecessaryConditionsHold>) {
          return "necessary conditions hold (finiteness not decided)";
        } else {
          std::string out = "violated: " + x.witness;
          if (!x.components.empty()) {
            out += " (components";
            for (auto i : x.components) out += " " + std::to_string(i);
            out += ")";
          }
          return out;
        }
      },
      v);
}

inline Json record(const Verdict& v) {
  return std::visit(
      [](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        Json j;
        if constexpr (std::is_same_v<T, FinitelyMany>) {
          j["outcome"] = "finitely-many";
          if (x.field) j["field"] = render(*x.field);
          if (x.count) j["count"] = count_record(*x.count);
        } else if constexpr (std::is_same_v<T, InfinitelyMany>) {
          j["outcome"] = "infinitely-many";
          j["reason"] = to_string(x.reason);
        } else if constexpr (std::is_same_v<T, NecessaryConditionsHold>) {
          j["outcome"] = "necessary-conditions-hold";
        } else {
          j["outcome"] = "violated";
          j["witness"] = x.witness;
          j["components"] = x.components;
        }
        return j;
      },
      v);
}

inline std::vector<std::string> element_labels(const FiniteRing& r, const ElementSet& s) {
  std::vector<std::string> out;
  for (auto e : s.elements()) out.push_back(r.label(e));
  return out;
}

inline std::string braced(const std::vector<std::string>& items) {
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + items[i];
  return out + "}";
}

/// Full lattice listing: subrings by index, covering pairs, co-atoms.
inline std::string describe_lattice(const FiniteRing& r, const SubringLattice& l) {
  std::ostringstream os;
  os << r.description() << ": " << r.size() << " elements, " << l.subrings.size() << " subrings\n";
  for (std::size_t i = 0; i < l.subrings.size(); ++i)
    os << "  S" << i << " [" << l.subrings[i].count() << "] " << braced(element_labels(r, l.subrings[i])) << "\n";
  os << "covers:";
  for (const auto& [lo, hi] : l.covers) os << " S" << lo << "<S" << hi;
  os << "\nmaximal:";
  for (const auto& [lo, hi] : l.covers)
    if (hi == l.top) os << " S" << lo;
  os << "\n";
  return os.str();
}

inline std::vector<Json> lattice_records(const FiniteRing& r, const SubringLattice& l) {
  std::vector<Json> out;
  out.push_back({{"kind", "ring"}, {"ring", r.description()}, {"size", r.size()}, {"subrings", l.subrings.size()}});
  for (std::size_t i = 0; i < l.subrings.size(); ++i)
    out.push_back({{"kind", "subring"},
                   {"index", i},
                   {"size", l.subrings[i].count()},
                   {"elements", element_labels(r, l.subrings[i])}});
  for (const auto& [lo, hi] : l.covers) out.push_back({{"kind", "cover"}, {"lower", lo}, {"upper", hi}});
  for (const auto& [lo, hi] : l.covers)
    if (hi == l.top) out.push_back({{"kind", "maximal"}, {"index", lo}});
  return out;
}

inline std::string describe(const SuiteReport& s) {
  std::ostringstream os;
  for (const auto& i : s.instances) {
    os << s.suite << " " << i.name << ": predicted " << i.predicted << ", observed " << i.observed
       << ", sets " << (i.sets_equal ? "equal" : "differ") << " -> " << to_string(i.status);
    if (!i.detail.empty()) os << " (" << i.detail << ")";
    os << "\n";
  }
  os << s.suite << ": " << (s.all_match() ? "all instances match" : "NOT all instances match") << "\n";
  return os.str();
}

inline std::vector<Json> records(const SuiteReport& s) {
  std::vector<Json> out;
  for (const auto& i : s.instances)
    out.push_back({{"kind", "instance"},
                   {"suite", s.suite},
                   {"name", i.name},
                   {"predicted", i.predicted},
                   {"observed", i.observed},
                   {"sets_equal", i.sets_equal},
                   {"status", to_string(i.status)},
                   {"detail", i.detail}});
  out.push_back({{"kind", "suite"}, {"suite", s.suite}, {"all_match", s.all_match()}});
  return out;
}

}  // namespace steinitz
