#ifndef DIRAC_CHECKS_HPP
#define DIRAC_CHECKS_HPP

#include <string>
#include <vector>

namespace dirac {

/// One verified identity. Failed checks carry a witness: the exact basis
/// tuple or vector where the identity breaks.
struct Check {
  std::string name;
  bool pass = false;
  std::string witness;
};

struct Checklist {
  std::vector<Check> items;

  void add(std::string name, bool pass, std::string witness = "") {
    items.push_back({std::move(name), pass, std::move(witness)});
  }
  void merge(const Checklist& o) { items.insert(items.end(), o.items.begin(), o.items.end()); }
  bool ok() const {
    for (const auto& c : items)
      if (!c.pass) return false;
    return true;
  }
};

}  // namespace dirac

#endif
