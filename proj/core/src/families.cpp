#include "jetorder/families.hpp"

#include "jetorder/error.hpp"

namespace jetorder {

std::string_view to_string(Source p) {
  switch (p) {
    case Source::ClosedForm: return "closed form";
    case Source::Oracle: return "oracle";
    case Source::Count: return "count";
  }
  return "UNKNOWN";
}

std::string FamilySpec::name() const {
  if (const auto* v = std::get_if<VeroneseParams>(&params))
    return "veronese(n=" + std::to_string(v->n) + ", m=" + std::to_string(v->m) + ")";
  const auto& h = std::get<HirzebruchParams>(params);
  return "hirzebruch(r=" + std::to_string(h.r) + ", k=" + std::to_string(h.k) +
         ", l=" + std::to_string(h.l) + ")";
}

long FamilySpec::expect(const std::string& key) const {
  for (const auto& e : expected)
    if (e.name == key) return e.value;
  throw Error(ErrorCode::DomainError, "no expectation named " + key);
}

std::vector<Exponent> veronese_points(int n, int m) {
  if (n < 1 || m < 0) throw Error(ErrorCode::DomainError, "Veronese family needs n >= 1, m >= 0");
  return exponents_up_to(static_cast<std::size_t>(n), m);
}

std::vector<Exponent> hirzebruch_points(int r, int k, int l) {
  std::vector<Exponent> out;
  for (int j = 0; j <= l; ++j)
    for (int i = 0; i + r * j <= k; ++i) out.push_back(Exponent{i, j});
  return out;
}

FamilySpec veronese_family(int n, int m) {
  if (n < 1 || m < 1) throw Error(ErrorCode::DomainError, "Veronese family needs n >= 1, m >= 1");
  std::vector<IntVector> corners{IntVector(static_cast<std::size_t>(n), 0)};
  for (int i = 0; i < n; ++i) {
    IntVector c(static_cast<std::size_t>(n), 0);
    c[static_cast<std::size_t>(i)] = m;
    corners.push_back(c);
  }
  FamilySpec f{VeroneseParams{n, m},
               SubspaceV::from_monomials(static_cast<std::size_t>(n), veronese_points(n, m)),
               LatticePolytope::from_vertices(corners),
               {}};
  for (const char* key : {"N_inj", "n_inj", "n_surj", "n1_surj"})
    f.expected.push_back({key, m, Source::ClosedForm});
  f.expected.push_back({"dim", static_cast<long>(f.space.dim()), Source::Count});
  return f;
}

FamilySpec hirzebruch_family(int r, int k, int l) {
  if (r < 1 || l < 1 || k - l * r < 0)
    throw Error(ErrorCode::DomainError,
                "Hirzebruch family needs r >= 1, l >= 1 and k - l r >= 0 (got r=" + std::to_string(r) +
                    ", k=" + std::to_string(k) + ", l=" + std::to_string(l) + ")");
  FamilySpec f{HirzebruchParams{r, k, l},
               SubspaceV::from_monomials(2, hirzebruch_points(r, k, l)),
               LatticePolytope::from_vertices({{0, 0}, {k, 0}, {0, l}, {k - l * r, l}}),
               {}};
  const long surj = std::min(l, k - l * r);
  f.expected = {{"n_surj", surj, Source::ClosedForm},
                {"n1_surj", surj, Source::ClosedForm},
                {"N_inj", k, Source::ClosedForm},
                {"n_inj", k + l, Source::ClosedForm}};
  long dim = 0;
  for (int j = 0; j <= l; ++j) dim += k - r * j + 1;
  f.expected.push_back({"dim", dim, Source::Count});
  return f;
}

}  // namespace jetorder
