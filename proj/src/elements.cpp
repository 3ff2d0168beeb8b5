#include "gausseer/elements.hpp"

#include <array>

#include "gausseer/text.hpp"

namespace gausseer::elements {

namespace {

// Index is atomic number - 1.
constexpr std::array<std::string_view, kMaxAtomicNumber> kSymbols{{
    "H", "He", "Li", "Be", "B", "C", "N", "O", "F", "Ne", "Na", "Mg", "Al", "Si", "P",
    "S", "Cl", "Ar", "K", "Ca", "Sc", "Ti", "V", "Cr", "Mn", "Fe", "Co", "Ni", "Cu",
    "Zn", "Ga", "Ge", "As", "Se", "Br", "Kr", "Rb", "Sr", "Y", "Zr", "Nb", "Mo", "Tc",
    "Ru", "Rh", "Pd", "Ag", "Cd", "In", "Sn", "Sb", "Te", "I", "Xe", "Cs", "Ba", "La",
    "Ce", "Pr", "Nd", "Pm", "Sm", "Eu", "Gd", "Tb", "Dy", "Ho", "Er", "Tm", "Yb", "Lu",
    "Hf", "Ta", "W", "Re", "Os", "Ir", "Pt", "Au", "Hg", "Tl", "Pb", "Bi", "Po", "At",
    "Rn", "Fr", "Ra", "Ac", "Th", "Pa", "U", "Np", "Pu", "Am", "Cm", "Bk", "Cf", "Es",
    "Fm", "Md", "No", "Lr", "Rf", "Db", "Sg", "Bh", "Hs", "Mt", "Ds", "Rg", "Cn", "Nh",
    "Fl", "Mc", "Lv", "Ts", "Og",
}};

}  // namespace

std::string_view symbol(int atomic_number) {
  if (atomic_number < 1 || atomic_number > kMaxAtomicNumber) return {};
  return kSymbols[static_cast<std::size_t>(atomic_number - 1)];
}

int atomic_number(std::string_view canonical_symbol) {
  for (std::size_t i = 0; i < kSymbols.size(); ++i) {
    if (kSymbols[i] == canonical_symbol) return static_cast<int>(i) + 1;
  }
  return 0;
}

std::optional<std::string> canonicalize(std::string_view raw) {
  const auto t = text::trim(raw);
  for (auto s : kSymbols) {
    if (text::iequals(s, t)) return std::string(s);
  }
  return std::nullopt;
}

}  // namespace gausseer::elements
