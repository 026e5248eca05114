// capgroup command line tool. Talks to the library exclusively through the
// C API in capgroup.h.
//
// Exit codes, uniform across subcommands:
//   0  affirmative / verified
//   1  negative / falsified
//   2  usage, parse, or resource error

#include "capgroup.h"

#include <charconv>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

using nlohmann::json;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

struct GroupDeleter {
  void operator()(capg_group *g) const { capg_group_free(g); }
};
struct FamilyDeleter {
  void operator()(capg_family *f) const { capg_family_free(f); }
};
struct TypeListDeleter {
  void operator()(capg_type_list *l) const { capg_type_list_free(l); }
};
using GroupPtr = std::unique_ptr<capg_group, GroupDeleter>;
using FamilyPtr = std::unique_ptr<capg_family, FamilyDeleter>;
using TypeListPtr = std::unique_ptr<capg_type_list, TypeListDeleter>;

[[noreturn]] void die(int code, const std::string &msg) {
  std::cerr << "capgroup: " << msg << "\n";
  std::exit(code);
}

int exit_code_for(capg_status s) {
  return s == CAPG_ERR_NOT_CAPABLE ? kExitNo : kExitError;
}

void check(capg_status s) {
  if (s != CAPG_OK)
    die(exit_code_for(s),
        std::string(capg_last_error()) + " [" + capg_status_name(s) + "]");
}

GroupPtr make_group(const std::vector<int64_t> &orders) {
  capg_group *g = nullptr;
  check(capg_group_new(orders.data(), orders.size(), &g));
  return GroupPtr(g);
}

std::vector<int64_t> group_factors(const capg_group *g) {
  std::vector<int64_t> f(capg_group_rank(g));
  check(capg_group_factors(g, f.data(), f.size()));
  return f;
}

std::string join_ints(const std::vector<int64_t> &v, const char *sep) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i)
      out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

// Invariant factor lists print as "2,4"; the empty list is the trivial
// type and prints as "1".
std::string type_string(const std::vector<int64_t> &factors) {
  return factors.empty() ? "1" : join_ints(factors, ",");
}

std::vector<std::vector<int64_t>> member_generators(const capg_family *fam,
                                                    size_t member,
                                                    size_t rank) {
  size_t count = 0;
  check(capg_family_generator_count(fam, member, &count));
  std::vector<int64_t> flat(count * rank);
  check(capg_family_generators(fam, member, flat.data(), flat.size()));
  std::vector<std::vector<int64_t>> gens(count);
  for (size_t i = 0; i < count; ++i)
    gens[i] = std::vector<int64_t>(flat.begin() + i * rank,
                                   flat.begin() + (i + 1) * rank);
  if (gens.empty())
    gens.push_back(std::vector<int64_t>(rank, 0)); // trivial subgroup
  return gens;
}

// ---- family files -----------------------------------------------------
//
// Text: one subgroup per line, generators separated by ';', coordinates by
// ','. '#' starts a comment; blank lines are ignored. JSON: an array of
// subgroups, each an array of generator coordinate vectors. The loader
// sniffs the format from the first non-space byte.

using ParsedFamily = std::vector<std::vector<std::vector<int64_t>>>;

int64_t parse_coord(const std::string &token, size_t line_no) {
  size_t begin = token.find_first_not_of(" \t");
  size_t end = token.find_last_not_of(" \t");
  if (begin == std::string::npos)
    die(kExitError, "line " + std::to_string(line_no) + ": empty coordinate");
  int64_t value = 0;
  auto res =
      std::from_chars(token.data() + begin, token.data() + end + 1, value);
  if (res.ec != std::errc() || res.ptr != token.data() + end + 1)
    die(kExitError, "line " + std::to_string(line_no) +
                        ": malformed coordinate '" +
                        token.substr(begin, end - begin + 1) + "'");
  return value;
}

ParsedFamily parse_family_text(const std::string &content) {
  ParsedFamily family;
  std::istringstream in(content);
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' ||
                             line.back() == '\t'))
      line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos)
      continue;
    std::vector<std::vector<int64_t>> gens;
    std::istringstream parts(line);
    std::string gen_token;
    while (std::getline(parts, gen_token, ';')) {
      std::vector<int64_t> coords;
      std::istringstream coords_in(gen_token);
      std::string coord_token;
      while (std::getline(coords_in, coord_token, ','))
        coords.push_back(parse_coord(coord_token, line_no));
      gens.push_back(std::move(coords));
    }
    family.push_back(std::move(gens));
  }
  return family;
}

ParsedFamily parse_family_json(const std::string &content) {
  json doc;
  try {
    doc = json::parse(content);
  } catch (const json::exception &e) {
    die(kExitError, std::string("family file: ") + e.what());
  }
  if (!doc.is_array())
    die(kExitError, "family file: top level JSON value must be an array");
  ParsedFamily family;
  for (size_t s = 0; s < doc.size(); ++s) {
    if (!doc[s].is_array())
      die(kExitError, "family file: subgroup " + std::to_string(s + 1) +
                          " must be an array of generators");
    std::vector<std::vector<int64_t>> gens;
    for (size_t g = 0; g < doc[s].size(); ++g) {
      const json &jgen = doc[s][g];
      if (!jgen.is_array())
        die(kExitError, "family file: subgroup " + std::to_string(s + 1) +
                            " generator " + std::to_string(g + 1) +
                            " must be an array of integers");
      std::vector<int64_t> coords;
      for (const json &c : jgen) {
        if (!c.is_number_integer())
          die(kExitError, "family file: subgroup " + std::to_string(s + 1) +
                              " generator " + std::to_string(g + 1) +
                              " has a non-integer coordinate");
        coords.push_back(c.get<int64_t>());
      }
      gens.push_back(std::move(coords));
    }
    family.push_back(std::move(gens));
  }
  return family;
}

ParsedFamily load_family_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    die(kExitError, "cannot open family file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string content = buf.str();
  size_t first = content.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && content[first] == '[')
    return parse_family_json(content);
  return parse_family_text(content);
}

// Generator vectors must have one coordinate per invariant factor, each in
// [0, n_i).
void validate_family(const ParsedFamily &family,
                     const std::vector<int64_t> &factors) {
  for (size_t s = 0; s < family.size(); ++s)
    for (size_t g = 0; g < family[s].size(); ++g) {
      const auto &coords = family[s][g];
      if (coords.size() != factors.size())
        die(kExitError, "subgroup " + std::to_string(s + 1) + " generator " +
                            std::to_string(g + 1) + ": expected " +
                            std::to_string(factors.size()) +
                            " coordinates, got " +
                            std::to_string(coords.size()));
      for (size_t i = 0; i < coords.size(); ++i)
        if (coords[i] < 0 || coords[i] >= factors[i])
          die(kExitError, "subgroup " + std::to_string(s + 1) + " generator " +
                              std::to_string(g + 1) + ": coordinate " +
                              std::to_string(coords[i]) +
                              " out of range [0, " +
                              std::to_string(factors[i]) + ")");
    }
}

FamilyPtr build_family(const capg_group *group, const ParsedFamily &parsed) {
  capg_family *fam = nullptr;
  check(capg_family_new(group, &fam));
  FamilyPtr out(fam);
  size_t rank = capg_group_rank(group);
  for (const auto &gens : parsed) {
    std::vector<int64_t> flat;
    flat.reserve(gens.size() * rank);
    for (const auto &g : gens)
      flat.insert(flat.end(), g.begin(), g.end());
    check(capg_family_add_subgroup(out.get(), flat.data(), gens.size()));
  }
  return out;
}

// ---- subcommands ------------------------------------------------------

int cmd_capable(const std::vector<int64_t> &orders) {
  GroupPtr g = make_group(orders);
  auto factors = group_factors(g.get());
  std::cout << "invariant factors: " << type_string(factors) << "\n";
  if (capg_group_is_capable(g.get())) {
    std::cout << "capable\n";
    return kExitYes;
  }
  if (factors.size() < 2)
    std::cout << "not capable (cyclic)\n";
  else
    std::cout << "not capable (top invariant factors differ)\n";
  return kExitNo;
}

int cmd_witness(const std::vector<int64_t> &orders, const std::string &format) {
  GroupPtr g = make_group(orders);
  capg_family *fam = nullptr;
  check(capg_witness_family(g.get(), &fam));
  FamilyPtr family(fam);
  size_t rank = capg_group_rank(g.get());
  if (format == "json") {
    json doc = json::array();
    for (size_t m = 0; m < capg_family_size(family.get()); ++m)
      doc.push_back(member_generators(family.get(), m, rank));
    std::cout << doc.dump(2) << "\n";
  } else {
    for (size_t m = 0; m < capg_family_size(family.get()); ++m) {
      auto gens = member_generators(family.get(), m, rank);
      for (size_t i = 0; i < gens.size(); ++i)
        std::cout << (i ? ";" : "") << join_ints(gens[i], ",");
      std::cout << "\n";
    }
  }
  return kExitYes;
}

int cmd_verify(const std::vector<int64_t> &orders, const std::string &path,
               const std::string &mode, const std::string &format) {
  GroupPtr g = make_group(orders);
  auto factors = group_factors(g.get());
  ParsedFamily parsed = load_family_file(path);
  if (parsed.empty())
    die(kExitError, "family file '" + path + "' contains no subgroups");
  validate_family(parsed, factors);
  FamilyPtr family = build_family(g.get(), parsed);

  capg_report report{};
  check(capg_verify_family(g.get(), family.get(), &report));

  size_t members = capg_family_size(family.get());
  std::vector<std::vector<int64_t>> sub_invs, quot_invs;
  std::vector<int64_t> quot_exps;
  for (size_t m = 0; m < members; ++m) {
    std::vector<int64_t> buf(factors.size());
    size_t written = 0;
    check(capg_family_member_invariants(family.get(), m, buf.data(),
                                        buf.size(), &written));
    sub_invs.emplace_back(buf.begin(), buf.begin() + written);
    check(capg_family_quotient_invariants(family.get(), m, buf.data(),
                                          buf.size(), &written));
    quot_invs.emplace_back(buf.begin(), buf.begin() + written);
    int64_t e = 0;
    check(capg_family_quotient_exponent(family.get(), m, &e));
    quot_exps.push_back(e);
  }

  bool verdict = mode == "c" ? report.verdict_c : report.verdict_d;
  auto yesno = [](int b) { return b ? "yes" : "no"; };
  if (format == "json") {
    json doc{{"factors", factors},
             {"members", members},
             {"intersection_trivial", (bool)report.intersection_trivial},
             {"generates", (bool)report.generates},
             {"covers", (bool)report.covers},
             {"quotients_same_exponent", (bool)report.quotients_same_exponent},
             {"quotients_isomorphic", (bool)report.quotients_isomorphic},
             {"subgroups_isomorphic", (bool)report.subgroups_isomorphic},
             {"quotient_exponents", quot_exps},
             {"quotient_invariants", quot_invs},
             {"subgroup_invariants", sub_invs},
             {"verdict_c", (bool)report.verdict_c},
             {"verdict_d", (bool)report.verdict_d},
             {"mode", mode},
             {"verdict", verdict}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "invariant factors: " << type_string(factors) << "\n"
              << "members: " << members << "\n"
              << "intersection_trivial: " << yesno(report.intersection_trivial)
              << "\n"
              << "generates: " << yesno(report.generates) << "\n"
              << "covers: " << yesno(report.covers) << "\n";
    std::cout << "quotient_exponents:";
    for (int64_t e : quot_exps)
      std::cout << " " << e;
    std::cout << "\nquotient_invariants:";
    for (const auto &inv : quot_invs)
      std::cout << " (" << type_string(inv) << ")";
    std::cout << "\nsubgroup_invariants:";
    for (const auto &inv : sub_invs)
      std::cout << " (" << type_string(inv) << ")";
    std::cout << "\nquotients_same_exponent: "
              << yesno(report.quotients_same_exponent) << "\n"
              << "quotients_isomorphic: " << yesno(report.quotients_isomorphic)
              << "\n"
              << "subgroups_isomorphic: " << yesno(report.subgroups_isomorphic)
              << "\n"
              << "verdict_c: " << yesno(report.verdict_c) << "\n"
              << "verdict_d: " << yesno(report.verdict_d) << "\n"
              << "result (mode " << mode << "): "
              << (verdict ? "PASS" : "FAIL") << "\n";
  }
  return verdict ? kExitYes : kExitNo;
}

int cmd_subgroups(const std::vector<int64_t> &orders, int64_t bound) {
  GroupPtr g = make_group(orders);
  capg_family *fam = nullptr;
  check(capg_enumerate_subgroups(g.get(), bound, &fam));
  FamilyPtr subgroups(fam);
  size_t rank = capg_group_rank(g.get());
  for (size_t m = 0; m < capg_family_size(subgroups.get()); ++m) {
    std::vector<int64_t> basis(rank * rank);
    check(capg_family_member_basis(subgroups.get(), m, basis.data(),
                                   basis.size()));
    std::string rows;
    for (size_t r = 0; r < rank; ++r) {
      if (r)
        rows += ";";
      for (size_t c = 0; c < rank; ++c)
        rows += (c ? "," : "") + std::to_string(basis[r * rank + c]);
    }
    int64_t order = 0;
    check(capg_family_member_order(subgroups.get(), m, &order));
    std::vector<int64_t> buf(rank);
    size_t written = 0;
    check(capg_family_member_invariants(subgroups.get(), m, buf.data(),
                                        buf.size(), &written));
    std::string sub_type = type_string({buf.begin(), buf.begin() + written});
    check(capg_family_quotient_invariants(subgroups.get(), m, buf.data(),
                                          buf.size(), &written));
    std::string quot_type = type_string({buf.begin(), buf.begin() + written});
    std::cout << (rank == 0 ? "-" : rows) << "  order=" << order
              << "  type=" << sub_type << "  quotient=" << quot_type << "\n";
  }
  return kExitYes;
}

int cmd_survey(int64_t max_order, int64_t bound) {
  capg_type_list *raw = nullptr;
  check(capg_abelian_types(max_order, &raw));
  TypeListPtr types(raw);
  bool all_agree = true;
  std::string counterexample;
  for (size_t i = 0; i < capg_type_list_size(types.get()); ++i) {
    std::vector<int64_t> factors(capg_type_list_rank(types.get(), i));
    check(capg_type_list_factors(types.get(), i, factors.data(),
                                 factors.size()));
    GroupPtr g = make_group(factors);
    int64_t order = 0;
    check(capg_group_order(g.get(), &order));
    int capable = capg_group_is_capable(g.get());
    int has_c = 0, has_d = 0;
    check(capg_exists_family_c(g.get(), bound, &has_c));
    check(capg_exists_family_d(g.get(), bound, &has_d));
    auto yesno = [](int b) { return b ? "yes" : "no"; };
    std::cout << "order=" << order << " type=" << type_string(factors)
              << " capable=" << yesno(capable) << " family_c=" << yesno(has_c)
              << " family_d=" << yesno(has_d) << "\n";
    if ((capable != has_c || capable != has_d) && all_agree) {
      all_agree = false;
      counterexample =
          "order=" + std::to_string(order) + " type=" + type_string(factors);
    }
  }
  if (all_agree) {
    std::cout << "EQUIVALENCE HOLDS (" << capg_type_list_size(types.get())
              << " types, orders 1.." << max_order << ")\n";
    return kExitYes;
  }
  std::cout << "COUNTEREXAMPLE: " << counterexample << "\n";
  return kExitNo;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"capability of finite abelian groups: witness families, "
               "family verification, subgroup enumeration"};
  app.require_subcommand(1);

  std::vector<int64_t> orders;
  std::string format = "text";
  std::string mode = "d";
  std::string family_path;
  int64_t bound = 0; // 0 = library default
  int64_t max_order_pos = -1;
  int64_t max_order_opt = -1;

  auto *capable = app.add_subcommand("capable", "decide capability");
  capable->add_option("factors", orders, "cyclic factor orders (> 1)")
      ->required();

  auto *witness = app.add_subcommand(
      "witness", "construct the witness family of a capable group");
  witness->add_option("factors", orders, "cyclic factor orders (> 1)")
      ->required();
  witness->add_option("--format", format, "output format: text|json")
      ->check(CLI::IsMember({"text", "json"}));

  auto *verify = app.add_subcommand(
      "verify", "verify a family of subgroups read from a file");
  verify->add_option("file", family_path, "family file (text or JSON)")
      ->required();
  verify->add_option("factors", orders, "cyclic factor orders (> 1)")
      ->required();
  verify->add_option("--mode", mode, "condition to decide: c|d (default d)")
      ->check(CLI::IsMember({"c", "d"}));
  verify->add_option("--format", format, "report format: text|json")
      ->check(CLI::IsMember({"text", "json"}));

  auto *subgroups =
      app.add_subcommand("subgroups", "list all subgroups of a group");
  subgroups->add_option("factors", orders, "cyclic factor orders (> 1)")
      ->required();
  subgroups->add_option("--bound", bound,
                        "enumeration cap on |G| (default 4096)");

  auto *survey = app.add_subcommand(
      "survey", "check capability against both family conditions for every "
                "abelian type up to an order");
  survey->add_option("max_order", max_order_pos, "largest group order");
  survey->add_option("--max-order", max_order_opt, "largest group order");
  survey->add_option("--bound", bound, "enumeration cap on |G| (default 4096)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0) // --help
      return app.exit(e);
    app.exit(e);
    return kExitError;
  }

  if (capable->parsed())
    return cmd_capable(orders);
  if (witness->parsed())
    return cmd_witness(orders, format);
  if (verify->parsed())
    return cmd_verify(orders, family_path, mode, format);
  if (subgroups->parsed())
    return cmd_subgroups(orders, bound);
  if (survey->parsed()) {
    int64_t max_order = max_order_opt >= 0 ? max_order_opt : max_order_pos;
    if (max_order < 1)
      die(kExitError, "survey requires a max order >= 1");
    return cmd_survey(max_order, bound);
  }
  return kExitError;
}
