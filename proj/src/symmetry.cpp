#include "annni/symmetry.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "annni/dense.hpp"

namespace annni {

namespace {

constexpr double kProjTol = 1e-10;
constexpr double kGramTol = 1e-8;

std::optional<int> parse_slot(const std::string& tok) {
  if (tok == "-") return std::nullopt;
  return std::stoi(tok);
}

cplx eigenvalue_phase(const SymOp& op, int p) {
  return std::polar(1.0, 2.0 * std::numbers::pi * p / op.order());
}

struct LabeledOp {
  SymOp op;
  int p;
};

std::vector<LabeledOp> present_ops(int sites, const SectorLabel& label) {
  std::vector<LabeledOp> ops;
  if (label.p_I) ops.push_back({{SymKind::Inversion, sites}, *label.p_I});
  if (label.p_R) ops.push_back({{SymKind::Reflection, sites}, *label.p_R});
  if (label.p_T2)
    ops.push_back({{SymKind::TranslationPower, sites, sites / 2}, *label.p_T2});
  if (label.p_T) ops.push_back({{SymKind::Translation, sites}, *label.p_T});
  return ops;
}

}  // namespace

SectorLabel SectorLabel::parse(const std::string& text) {
  std::vector<std::string> toks;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) toks.push_back(tok);
  if (toks.size() != 4)
    throw std::invalid_argument("sector label needs 4 comma-joined slots: " + text);
  return SectorLabel{parse_slot(toks[0]), parse_slot(toks[1]), parse_slot(toks[2]),
                     parse_slot(toks[3])};
}

std::string SectorLabel::to_string() const {
  auto slot = [](const std::optional<int>& p) {
    return p ? std::to_string(*p) : std::string("-");
  };
  return slot(p_I) + "," + slot(p_R) + "," + slot(p_T2) + "," + slot(p_T);
}

void SectorLabel::validate(int sites) const {
  if (!p_I && !p_R && !p_T2 && !p_T)
    throw std::invalid_argument("sector label has no quantum numbers");
  if (p_I && (*p_I < 0 || *p_I > 1)) throw std::invalid_argument("p_I out of range");
  if (p_R && (*p_R < 0 || *p_R > 1)) throw std::invalid_argument("p_R out of range");
  if (p_T2 && (*p_T2 < 0 || *p_T2 > 1))
    throw std::invalid_argument("p_T2 out of range");
  if (p_T2 && sites % 2 != 0)
    throw std::invalid_argument("p_T2 undefined for odd chain length");
  if (p_T && (*p_T < 0 || *p_T >= sites))
    throw std::invalid_argument("p_T out of range");
  // phi_{p_T}^{L/2} = (-1)^{p_T} for even L, so p_T2 must match p_T parity
  if (p_T && p_T2 && (*p_T % 2) != *p_T2)
    throw std::invalid_argument("p_T inconsistent with p_T2 in label " + to_string());
}

int SymOp::order() const {
  switch (kind) {
    case SymKind::Inversion:
    case SymKind::Reflection:
      return 2;
    case SymKind::Translation:
      return sites;
    case SymKind::TranslationPower: {
      int n = 1;
      int shift = power % sites;
      if (shift == 0) return 1;
      // smallest n with n*shift divisible by L
      while ((n * shift) % sites != 0) ++n;
      return n;
    }
  }
  return 1;
}

uint64_t SymOp::map_basis(uint64_t b) const {
  const uint64_t mask = (uint64_t{1} << sites) - 1;
  auto rotl1 = [&](uint64_t v) {
    return ((v << 1) & mask) | (v >> (sites - 1));
  };
  switch (kind) {
    case SymKind::Inversion:
      return ~b & mask;
    case SymKind::Reflection: {
      uint64_t r = 0;
      for (int j = 0; j < sites; ++j)
        if (b & (uint64_t{1} << j)) r |= uint64_t{1} << (sites - 1 - j);
      return r;
    }
    case SymKind::Translation:
      return rotl1(b);
    case SymKind::TranslationPower: {
      uint64_t v = b;
      for (int k = 0; k < power % sites; ++k) v = rotl1(v);
      return v;
    }
  }
  return b;
}

StateVector apply_symmetry(const SymOp& op, const StateVector& psi) {
  if (op.sites != psi.sites())
    throw std::invalid_argument("length mismatch in apply_symmetry");
  std::vector<cplx> out(psi.dim(), cplx{0.0, 0.0});
  const auto& in = psi.amplitudes();
  for (uint64_t b = 0; b < psi.dim(); ++b) out[op.map_basis(b)] = in[b];
  return StateVector(psi.sites(), std::move(out));
}

std::optional<StateVector> project_eigenvector(const SymOp& op, int p,
                                               const StateVector& psi) {
  const int n = op.order();
  if (p < 0 || p >= n) throw std::invalid_argument("eigenvalue index out of range");
  const cplx phi_inv = std::conj(eigenvalue_phase(op, p));
  std::vector<cplx> acc(psi.dim(), cplx{0.0, 0.0});
  std::vector<cplx> cur(psi.amplitudes());
  cplx w{1.0, 0.0};
  for (int j = 0; j < n; ++j) {
    for (std::size_t b = 0; b < acc.size(); ++b) acc[b] += w * cur[b];
    if (j + 1 < n) {
      std::vector<cplx> next(cur.size(), cplx{0.0, 0.0});
      for (uint64_t b = 0; b < cur.size(); ++b) next[op.map_basis(b)] = cur[b];
      cur = std::move(next);
      w *= phi_inv;
    }
  }
  double nrm2 = 0.0;
  for (const auto& a : acc) nrm2 += std::norm(a);
  const double nrm = std::sqrt(nrm2) / n;  // projector = mean over the orbit
  if (nrm < kProjTol) return std::nullopt;
  const double scale = 1.0 / std::sqrt(nrm2);
  for (auto& a : acc) a *= scale;
  return StateVector(psi.sites(), std::move(acc));
}

SectorBasis build_sector_basis(int sites, const SectorLabel& label) {
  label.validate(sites);
  if (sites > 14)
    throw std::invalid_argument("dense sector construction limited to L <= 14");
  const auto ops = present_ops(sites, label);
  SectorBasis basis{label, {}};
  const std::size_t dim = std::size_t{1} << sites;

  for (uint64_t seed = 0; seed < dim; ++seed) {
    std::optional<StateVector> v = StateVector::basis_state(sites, seed);
    for (const auto& [op, p] : ops) {
      v = project_eigenvector(op, p, *v);
      if (!v) break;
    }
    if (!v) continue;
    // Gram-Schmidt against the accepted vectors
    std::vector<cplx> amps = v->amplitudes();
    for (const auto& u : basis.vectors) {
      const cplx ov = inner(u, *v);
      const auto& ua = u.amplitudes();
      for (std::size_t b = 0; b < amps.size(); ++b) amps[b] -= ov * ua[b];
    }
    double nrm2 = 0.0;
    for (const auto& a : amps) nrm2 += std::norm(a);
    if (std::sqrt(nrm2) <= kGramTol) continue;
    const double scale = 1.0 / std::sqrt(nrm2);
    for (auto& a : amps) a *= scale;
    basis.vectors.emplace_back(sites, std::move(amps));
  }

  // Each vector must carry every labeled eigenvalue; successive projection
  // only guarantees this when the restricted operators commute.
  for (const auto& v : basis.vectors) {
    for (const auto& [op, p] : ops) {
      const StateVector pv = apply_symmetry(op, v);
      const cplx want = eigenvalue_phase(op, p);
      double dev = 0.0;
      for (std::size_t b = 0; b < pv.dim(); ++b)
        dev = std::max(dev, std::abs(pv.amplitudes()[b] - want * v.amplitudes()[b]));
      if (dev > kProjTol)
        throw std::invalid_argument("label " + label.to_string() +
                                    " is not admissible for L=" +
                                    std::to_string(sites));
    }
  }
  return basis;
}

StateVector chi_state(int sites, int i, const SectorLabel& label) {
  const SectorBasis basis = build_sector_basis(sites, label);
  if (basis.dim() == 0)
    throw std::invalid_argument("empty sector " + label.to_string());
  if (i < 0 || i >= basis.dim())
    throw std::out_of_range("chi index out of range for sector " + label.to_string());

  const PauliSum hd = build_driver(sites);
  const Eigen::MatrixXcd hd_full = to_matrix(hd);
  const Eigen::Index d = basis.dim();
  Eigen::MatrixXcd b(static_cast<Eigen::Index>(basis.vectors[0].dim()), d);
  for (Eigen::Index c = 0; c < d; ++c)
    b.col(c) = to_vector(basis.vectors[static_cast<std::size_t>(c)]);
  const Eigen::MatrixXcd restricted = b.adjoint() * hd_full * b;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(restricted);

  struct Entry {
    double value;
    Eigen::VectorXcd full;
    Eigen::Index argmax;
  };
  std::vector<Entry> entries;
  for (Eigen::Index k = 0; k < d; ++k) {
    Eigen::VectorXcd full = b * es.eigenvectors().col(k);
    Eigen::Index arg = 0;
    full.cwiseAbs().maxCoeff(&arg);
    entries.push_back({es.eigenvalues()(k), std::move(full), arg});
  }
  std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.value < b.value - 1e-9) return true;
    if (b.value < a.value - 1e-9) return false;
    return a.argmax < b.argmax;
  });
  Eigen::VectorXcd chosen = entries[static_cast<std::size_t>(i)].full;
  // deterministic global phase: largest amplitude real positive
  const cplx pivot = chosen(entries[static_cast<std::size_t>(i)].argmax);
  if (std::abs(pivot) > 0) chosen *= std::conj(pivot) / std::abs(pivot);
  chosen.normalize();
  return to_state(sites, chosen);
}

StateVector driver_ground(int sites) {
  const std::size_t dim = std::size_t{1} << sites;
  const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
  std::vector<cplx> amps(dim);
  for (uint64_t b = 0; b < dim; ++b)
    amps[b] = (std::popcount(b) & 1) ? -amp : amp;
  return StateVector(sites, std::move(amps));
}

std::pair<StateVector, StateVector> ghz_pair(int sites) {
  if (sites < 2) throw std::invalid_argument("ghz_pair needs L >= 2");
  const std::size_t dim = std::size_t{1} << sites;
  const double r = 1.0 / std::sqrt(2.0);
  std::vector<cplx> plus(dim, cplx{0.0, 0.0});
  std::vector<cplx> minus(dim, cplx{0.0, 0.0});
  plus[0] = r;
  plus[dim - 1] = r;
  minus[0] = r;
  minus[dim - 1] = -r;
  return {StateVector(sites, std::move(plus)), StateVector(sites, std::move(minus))};
}

double verify_block_diagonal(const AnnniParams& params,
                             const std::vector<SectorBasis>& bases) {
  params.validate();
  const Eigen::Index dim = Eigen::Index{1} << params.sites;
  Eigen::Index total = 0;
  for (const auto& basis : bases) total += basis.dim();
  if (total != dim)
    throw std::invalid_argument("sector bases are not jointly complete");

  Eigen::MatrixXcd b(dim, dim);
  std::vector<int> block(static_cast<std::size_t>(dim));
  Eigen::Index col = 0;
  int which = 0;
  for (const auto& basis : bases) {
    for (const auto& v : basis.vectors) {
      b.col(col) = to_vector(v);
      block[static_cast<std::size_t>(col)] = which;
      ++col;
    }
    ++which;
  }
  const Eigen::MatrixXcd h = b.adjoint() * to_matrix(build_problem(params)) * b;
  double worst = 0.0;
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j)
      if (block[static_cast<std::size_t>(i)] != block[static_cast<std::size_t>(j)])
        worst = std::max(worst, std::abs(h(i, j)));
  return worst;
}

double sector_overlap(const SectorBasis& basis, const StateVector& psi) {
  double acc = 0.0;
  for (const auto& v : basis.vectors) acc += std::norm(inner(v, psi));
  return acc;
}

std::vector<SectorLabel> base_label_family(int sites) {
  std::vector<SectorLabel> out;
  for (int pi = 0; pi < 2; ++pi)
    for (int pr = 0; pr < 2; ++pr) {
      if (sites % 2 == 0) {
        for (int pt2 = 0; pt2 < 2; ++pt2)
          out.push_back(SectorLabel{pi, pr, pt2, std::nullopt});
      } else {
        out.push_back(SectorLabel{pi, pr, std::nullopt, std::nullopt});
      }
    }
  return out;
}

std::vector<SectorLabel> refined_label_family(int sites) {
  std::vector<SectorLabel> out;
  for (const auto& base : base_label_family(sites)) {
    const SectorBasis whole = build_sector_basis(sites, base);
    if (whole.dim() == 0) continue;
    std::vector<SectorLabel> split;
    int split_dim = 0;
    bool admissible = true;
    for (int pt = 0; pt < sites && admissible; ++pt) {
      if (base.p_T2 && (pt % 2) != *base.p_T2) continue;
      SectorLabel cand = base;
      cand.p_T = pt;
      try {
        const SectorBasis sub = build_sector_basis(sites, cand);
        if (sub.dim() > 0) {
          split.push_back(cand);
          split_dim += sub.dim();
        }
      } catch (const std::invalid_argument&) {
        admissible = false;
      }
    }
    if (admissible && split_dim == whole.dim())
      out.insert(out.end(), split.begin(), split.end());
    else
      out.push_back(base);
  }
  return out;
}

SectorLabel detect_label(const StateVector& psi) {
  const int sites = psi.sites();
  SectorLabel label{std::nullopt, std::nullopt, std::nullopt, std::nullopt};
  auto detect = [&](const SymOp& op) -> std::optional<int> {
    const StateVector pv = apply_symmetry(op, psi);
    const cplx ov = inner(psi, pv);
    if (std::abs(std::abs(ov) - 1.0) > 1e-9) return std::nullopt;
    const double angle = std::arg(ov);
    const int n = op.order();
    const int p = static_cast<int>(std::llround(angle * n / (2.0 * std::numbers::pi)));
    return ((p % n) + n) % n;
  };
  label.p_I = detect({SymKind::Inversion, sites});
  label.p_R = detect({SymKind::Reflection, sites});
  if (sites % 2 == 0)
    label.p_T2 = detect({SymKind::TranslationPower, sites, sites / 2});
  label.p_T = detect({SymKind::Translation, sites});
  return label;
}

}  // namespace annni
