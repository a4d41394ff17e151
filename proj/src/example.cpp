#include "heckealg/example.hpp"

#include <cctype>

namespace heckealg {

namespace {

// reference expansions at v = 1, tokens in their customary printed order
struct GoldenLine {
  const char* label;
  const char* text;
};

const GoldenLine kGolden[] = {
    {"bb", "(1) - (12) - (13) - (23) + (123) + (132)"},
    {"bc", "(34) - (12)(34) - (143) - (243) + (1243) + (1432)"},
    {"bd", "(234) - (1342) - (1423) - (24) + (13)(24) + (142)"},
    {"cb", "(34) - (12)(34) - (134) - (234) + (1234) + (1342)"},
    {"cc", "(1) - (12) - (14) - (24) + (124) + (142)"},
    {"cd", "(23) - (132) - (14)(23) - (243) + (1324) + (1432)"},
    {"db", "(243) - (1243) - (1324) - (24) + (124) + (13)(24)"},
    {"dc", "(23) - (123) - (14)(23) - (234) + (1234) + (1423)"},
    {"dd", "(1) - (13) - (14) - (34) + (134) + (143)"},
};

// parse "(34) - (12)(34) + 2*(123)" into a group-algebra element at v = 1
HeckeElt<RationalAtQ> parse_group_expr(const std::string& s, int n, const RationalAtQ& ring) {
  HeckeElt<RationalAtQ> out(n, ring);
  size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    while (pos < s.size() && s[pos] == ' ') ++pos;
    if (pos >= s.size()) break;
    Rat sign(1);
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = Rat(-1);
      ++pos;
      while (pos < s.size() && s[pos] == ' ') ++pos;
    } else if (!first) {
      throw std::invalid_argument("parse_group_expr: missing sign in '" + s + "'");
    }
    Rat mag(1);
    size_t digits = pos;
    while (digits < s.size() && std::isdigit(static_cast<unsigned char>(s[digits]))) ++digits;
    if (digits > pos && digits < s.size() && s[digits] == '*') {
      mag = Rat(std::stol(s.substr(pos, digits - pos)));
      pos = digits + 1;
    }
    size_t end = pos;
    while (end < s.size() && s[end] != ' ') ++end;
    out.add_term(Permutation::from_cycles(s.substr(pos, end - pos), n), sign * mag);
    pos = end;
    first = false;
  }
  return out;
}

}  // namespace

ExampleReport example_s4_report() {
  ExampleReport rep;
  const int n = 4;
  rep.n = n;
  rep.lambda = Partition::parse("2,2");
  rep.ok = true;

  LaurentRing A;
  RationalAtQ Q1{Rat(1)};
  PrimeFieldAtQ G2(2, 1);
  Partition lat = rep.lambda.transpose();

  std::map<std::string, std::string> golden;
  for (const auto& line : kGolden) golden[line.label] = line.text;

  // tableau letters in enumeration order: one for the single row, then one
  // for each standard tableau of the hook shape
  std::map<Tableau, char> letter;
  char next = 'a';
  for (const Partition& mu : partitions_of(n)) {
    if (dominates(lat, mu)) continue;
    for (const Tableau& t : standard_tableaux(mu)) letter[t] = next++;
  }

  auto closed = annihilator_closed(n, A, rep.lambda);
  size_t k = 0;
  for (const Partition& mu : partitions_of(n)) {
    if (dominates(lat, mu)) continue;
    for (const Tableau& s : standard_tableaux(mu))
      for (const Tableau& t : standard_tableaux(mu)) {
        ExampleGenerator gen;
        gen.label = std::string{letter.at(s), letter.at(t)};

        // the enumerated basis applies sharp to the whole cellular element;
        // the printed normalization twists only the middle factor, which
        // costs the sign of the two coset words
        const HeckeElt<LaurentRing>& whole = closed.elements.at(k++);
        rep.ok = rep.ok && whole == sharp(murphy_elt(n, A, mu, s, t));
        long parity = tableau_word(s).length() + tableau_word(t).length();
        gen.sign_flipped = parity % 2 != 0;
        auto printed_form = whole.scaled(LaurentPoly(gen.sign_flipped ? -1 : 1));
        auto mid = lmul_t(tableau_word(s).inverse(),
                          mul_word(sharp(x_elem(n, A, mu)), tableau_word(t).reduced_word()));
        rep.ok = rep.ok && printed_form == mid;

        auto gq = specialize_elt(printed_form, Q1);
        auto it = golden.find(gen.label);
        if (it != golden.end()) {
          gen.matches_reference = gq == parse_group_expr(it->second, n, Q1);
          gen.printed = it->second;
        } else {
          // the sign character of the full symmetric group
          HeckeElt<RationalAtQ> ref(n, Q1);
          for (const Permutation& w : all_permutations(n))
            ref.add_term(w, Rat(w.length() % 2 ? -1 : 1));
          gen.matches_reference = gq == ref;
          gen.printed = group_algebra_str(gq);
        }
        rep.ok = rep.ok && gen.matches_reference;
        rep.generators.push_back(std::move(gen));
      }
  }
  rep.ok = rep.ok && rep.generators.size() == 10;

  PermModule<RationalAtQ> m0(n, Q1, rep.lambda);
  rep.dim_char0 = static_cast<long>(annihilator_kernel(m0).size());
  PermModule<PrimeFieldAtQ> m2(n, G2, rep.lambda);
  auto kern2 = annihilator_kernel(m2);
  rep.dim_char2 = static_cast<long>(kern2.size());
  rep.ok = rep.ok && rep.dim_char0 == 10 && rep.dim_char2 == 11;

  rep.r_text = "(23) + (1342) + (1243) + (14)";
  HeckeElt<PrimeFieldAtQ> r(n, G2);
  for (const char* tok : {"(23)", "(1342)", "(1243)", "(14)"})
    r.add_term(Permutation::from_cycles(tok, n), G2.one());
  rep.r_annihilates = annihilates_module(m2, r);

  std::map<Permutation, size_t> pos;
  auto perms = all_permutations(n);
  for (size_t i = 0; i < perms.size(); ++i) pos[perms[i]] = i;
  std::vector<HeckeElt<PrimeFieldAtQ>> reduced;
  reduced.reserve(closed.elements.size());
  for (const auto& e : closed.elements) reduced.push_back(specialize_elt(e, G2));
  auto reduced_rows = coord_matrix(n, G2, reduced);
  std::vector<std::vector<GFpElem>> rows;
  rows.reserve(reduced_rows.rows());
  for (size_t i = 0; i < reduced_rows.rows(); ++i) rows.push_back(reduced_rows.row(i));
  rep.membership_of_r = in_row_span(G2, rows, elt_coords(r, pos));

  for (const auto& g : kern2) {
    if (in_row_span(G2, rows, elt_coords(g, pos))) continue;
    rep.witness_char2 = group_algebra_str(g);
    break;
  }
  rep.ok = rep.ok && rep.r_annihilates && !rep.membership_of_r && !rep.witness_char2.empty();
  return rep;
}

std::string example_text(const ExampleReport& rep) {
  std::string out;
  out += "closed-form annihilator of the (2,2) permutation module, n = 4, at v = 1\n";
  for (const auto& gen : rep.generators) {
    out += "x♯_{" + gen.label + "} = " + gen.printed;
    if (!gen.matches_reference) out += "   [does not match the reference expansion]";
    out += "\n";
  }
  out += "characteristic 0 kernel dimension: " + std::to_string(rep.dim_char0) + "\n";
  out += "characteristic 2 kernel dimension: " + std::to_string(rep.dim_char2) + "\n";
  out += "r = " + rep.r_text + "\n";
  out += std::string("r annihilates the module over GF(2): ") +
         (rep.r_annihilates ? "yes" : "no") + "\n";
  out += std::string("r lies in the mod-2 reduction of the integral span: ") +
         (rep.membership_of_r ? "yes" : "no") + "\n";
  out += "a characteristic-2 annihilator outside that span: " + rep.witness_char2 + "\n";
  out += std::string("all checks passed: ") + (rep.ok ? "yes" : "no") + "\n";
  return out;
}

}  // namespace heckealg
