#include <doctest.h>

#include "gausseer/error.hpp"
#include "gausseer/taxonomy.hpp"

using namespace gausseer;

namespace {

std::vector<std::string> names(const Taxonomy& t, AttributeKind kind) {
  std::vector<std::string> out;
  for (const auto& c : t.categories(kind)) out.push_back(c.name);
  return out;
}

std::size_t config_error_line(std::string_view config) {
  try {
    load_taxonomy(config);
  } catch (const ConfigError& e) {
    CHECK(e.kind() == ErrorKind::ConfigError);
    return e.line();
  }
  FAIL("expected ConfigError");
  return 0;
}

}  // namespace

TEST_CASE("default config holds every attribute category") {
  const auto& tax = default_taxonomy();
  CHECK(names(tax, AttributeKind::JobType) ==
        std::vector<std::string>{"Single Point", "Opt", "Freq", "IRC", "IRCMax", "Force", "ONIOM",
                                 "ADMP", "BOMD", "Scan", "PBC", "SCRF", "NMR"});
  CHECK(names(tax, AttributeKind::Method) ==
        std::vector<std::string>{"Semi-empirical", "Molecular Mechanics", "Hartree-Fock",
                                 "MP Methods", "DFT Methods", "Multilevel Methods", "CI Methods",
                                 "Coupled Cluster Methods", "CASSCF", "BD", "OVGF", "Huckel",
                                 "Extended Huckel", "GVB", "CBS Methods"});
  CHECK(names(tax, AttributeKind::BasisSet) == std::vector<std::string>{"gen"});
}

TEST_CASE("expand") {
  const auto& tax = default_taxonomy();
  using S = std::set<std::string>;
  CHECK(tax.expand(AttributeKind::Method, "Hartree-Fock") == S{"hf", "rhf", "rohf", "uhf"});
  CHECK(tax.expand(AttributeKind::Method, "CBS Methods") ==
        S{"cbs-4m", "cbs-lq", "cbs-q", "cbs-qb3", "cbs-apno"});
  CHECK(tax.expand(AttributeKind::Method, "Molecular Mechanics") == S{"amber", "drieding", "uff"});
  CHECK(tax.expand(AttributeKind::Method, "CI Methods") ==
        S{"cis", "cis(d)", "cid", "cisd", "qcisd", "qcisd(t)", "sac-ci"});
  CHECK(tax.expand(AttributeKind::BasisSet, "3-21G*") == S{"3-21g*"});
  CHECK(tax.expand(AttributeKind::BasisSet, "gen") == S{"gen"});
  CHECK(tax.expand(AttributeKind::JobType, "Any").empty());
  CHECK(tax.expand(AttributeKind::JobType, "aNy").empty());
  CHECK(tax.expand(AttributeKind::JobType, "  ").empty());
  CHECK(tax.expand(AttributeKind::Method, "hartree-fock") ==
        tax.expand(AttributeKind::Method, "Hartree-Fock"));
  CHECK(tax.expand(AttributeKind::JobType, "Single Point") == S{"sp"});
}

TEST_CASE("categorize_token") {
  const auto& tax = default_taxonomy();
  CHECK(tax.categorize_token(AttributeKind::Method, "rohf") == "Hartree-Fock");
  CHECK(tax.categorize_token(AttributeKind::Method, "sac-ci") == "CI Methods");
  CHECK(tax.categorize_token(AttributeKind::Method, "xyz123") == "xyz123");
  CHECK(tax.categorize_token(AttributeKind::Method, " QCISD(T) ") == "CI Methods");
  // Option lists fall back to the keyword.
  CHECK(tax.categorize_token(AttributeKind::JobType, "opt(calcfc)") == "Opt");
  CHECK(tax.categorize_token(AttributeKind::Method, "casscf(4,4)") == "CASSCF");
  CHECK(tax.categorize_token(AttributeKind::BasisSet, "6-31g(d)") == "6-31g(d)");
}

TEST_CASE("normalize_token") {
  CHECK(normalize_token("QCISD(T)") == "qcisd(t)");
  CHECK(normalize_token("  Opt ") == "opt");
  CHECK(normalize_token("6-31G(d)") == "6-31g(d)");
  CHECK(normalize_token("6-311+G*") == "6-311+g*");
  CHECK(keyword_base("opt(calcfc)") == "opt");
  CHECK(keyword_base("(odd)") == "(odd)");
  CHECK(keyword_base("hf") == "hf");
}

TEST_CASE("expand then categorize round-trips for every category") {
  const auto& tax = default_taxonomy();
  for (auto kind : kAttributeKinds) {
    for (const auto& cat : tax.categories(kind)) {
      for (const auto& t : tax.expand(kind, cat.name)) {
        CHECK(tax.categorize_token(kind, t) == cat.name);
      }
      CHECK(tax.expand(kind, cat.name) == tax.expand(kind, normalize_token(cat.name)));
    }
  }
}

TEST_CASE("load_taxonomy errors carry line numbers") {
  CHECK(config_error_line("method\tHartree-Fock\thf\nmethod\tOther\trhf,hf\n") == 2);
  CHECK(config_error_line("# c\nmethod\tA\tx,x\n") == 2);
  CHECK(config_error_line("colour\tRed\tred\n") == 1);
  CHECK(config_error_line("method\tOnly two fields\n") == 1);
  CHECK(config_error_line("method\t\tx\n") == 1);
  CHECK(config_error_line("method\tAny\tx\n") == 1);
  CHECK(config_error_line("method\tA\tx\nmethod\ta\ty\n") == 2);
  CHECK(config_error_line("method\tA\tx,,y\n") == 1);
}

TEST_CASE("load_taxonomy edge cases") {
  const auto empty = load_taxonomy("");
  for (auto kind : kAttributeKinds) CHECK(empty.categories(kind).empty());
  CHECK(empty.expand(AttributeKind::Method, "Hartree-Fock") == std::set<std::string>{"hartree-fock"});

  // The same token may appear under different kinds; repeated lines extend a category.
  const auto t = load_taxonomy(
      "# comment\n\njob_type\tScan\tscan\nmethod\tScan\tscan\nmethod\tScan\tscan2\n");
  CHECK(t.expand(AttributeKind::Method, "scan") == std::set<std::string>{"scan", "scan2"});
  CHECK(load_taxonomy("method\tMP\tmp4(sdq),mp2\n").expand(AttributeKind::Method, "MP") ==
        std::set<std::string>{"mp4(sdq)", "mp2"});

  CHECK(load_taxonomy(default_taxonomy().to_config_text()) == default_taxonomy());
}

TEST_CASE("kind names") {
  CHECK(parse_kind("basis_set") == AttributeKind::BasisSet);
  try {
    parse_kind("energy");
    FAIL("expected UnknownKind");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownKind);
  }
}
