#include <gtest/gtest.h>

#include "test_support.hpp"
#include "thetalab/error.hpp"
#include "thetalab/matrix_factorization.hpp"
#include "thetalab/theta.hpp"
#include "thetalab/truncation_oracle.hpp"

namespace thetalab {
namespace {

using testing::P;
using testing::vars;

const auto xy = vars({"x", "y"});
const auto xyz = vars({"x", "y", "z"});
const auto xyzw = vars({"x", "y", "z", "w"});

ModulePresentation ideal_module(std::initializer_list<const char*> gens, const char* f,
                                const std::vector<std::string>& ring) {
  std::vector<Poly> g;
  for (const char* s : gens) g.push_back(P(s, ring));
  return ModulePresentation::from_ideal(g, P(f, ring));
}

MatrixFactorization cone_pair() {
  return mf_validate(PolyMatrix::parse({{"y", "-z"}, {"-z", "x"}}, xyz),
                     PolyMatrix::parse({{"x", "z"}, {"z", "y"}}, xyz), P("x*y - z^2", xyz));
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::Unsupported;
}

// Periodic Tor through the truncation oracle, required stable at K and K+1.
PeriodicTor oracle_tor(const MatrixFactorization& m, const ModulePresentation& n) {
  const int deg = std::max({m.a().max_degree(), m.b().max_degree(), n.relations().max_degree()});
  const int k = oracle::default_level(deg);
  const int slack = 2 * deg + 2;
  const auto a = oracle::truncated_tor_lengths(m.a(), m.b(), n.relations(), k, slack);
  const auto b = oracle::truncated_tor_lengths(m.a(), m.b(), n.relations(), k + 1, slack);
  EXPECT_EQ(a, b) << "oracle unstable between levels";
  return PeriodicTor{a.even, a.odd};
}

TEST(MfValidate, ConePair) {
  const MatrixFactorization m = cone_pair();
  EXPECT_EQ(m.size(), 2u);
}

TEST(MfValidate, OneByOne) {
  EXPECT_NO_THROW(mf_validate(PolyMatrix::parse({{"x"}}, xy), PolyMatrix::parse({{"y"}}, xy), P("x*y", xy)));
}

TEST(MfValidate, RejectsWrongProduct) {
  EXPECT_EQ(code_of([] {
              (void)mf_validate(PolyMatrix::parse({{"x"}}, xy), PolyMatrix::parse({{"x"}}, xy), P("x*y", xy));
            }),
            ErrorCode::NotAFactorization);
  EXPECT_EQ(code_of([] {
              (void)mf_validate(PolyMatrix::parse({{"x", "0"}}, xy), PolyMatrix::parse({{"y"}}, xy), P("x*y", xy));
            }),
            ErrorCode::RankMismatch);
}

TEST(MfFromModule, ConeLine) {
  const auto m = ideal_module({"x", "z"}, "x*y - z^2", xyz);
  const ExtractedFactorization ex = mf_from_module(m);
  EXPECT_EQ(ex.mf.size(), 2u);
  EXPECT_EQ(ex.mf.a() * ex.mf.b(), PolyMatrix::scalar(2, P("x*y - z^2", xyz)));
  EXPECT_EQ(ex.syzygy_steps, 1u);
}

TEST(MfFromModule, FreeModule) {
  const Poly f = P("x*y", xy);
  EXPECT_EQ(code_of([&] { (void)mf_from_module(ModulePresentation(PolyMatrix::parse({{"x*y"}}, xy), f)); }),
            ErrorCode::FreeModule);
  EXPECT_EQ(code_of([&] { (void)mf_from_module(ModulePresentation::from_ideal({}, f)); }), ErrorCode::FreeModule);
}

TEST(MfFromModule, CoordinateLine) {
  const ExtractedFactorization ex = mf_from_module(ideal_module({"x"}, "x*y", xy));
  EXPECT_EQ(ex.syzygy_steps, 0u);
  EXPECT_EQ(ex.mf.a(), PolyMatrix::parse({{"x"}}, xy));
  EXPECT_EQ(ex.mf.b(), PolyMatrix::parse({{"y"}}, xy));
}

TEST(MfFromModule, NonzeroDivisorQuotientHasFiniteProjectiveDimension) {
  EXPECT_EQ(code_of([] { (void)mf_from_module(ideal_module({"z"}, "x*y - z^2", xyz)); }), ErrorCode::FreeModule);
}

TEST(MfFromModule, FactorizationInputRoundTrips) {
  const MatrixFactorization m = cone_pair();
  const ExtractedFactorization ex = mf_from_module(ModulePresentation::from_mf(m));
  EXPECT_EQ(ex.syzygy_steps, 0u);
  EXPECT_EQ(ex.mf, m);
}

TEST(MfDirectSum, Blocks) {
  const Poly f = P("x*y", xy);
  const auto m1 = mf_validate(PolyMatrix::parse({{"x"}}, xy), PolyMatrix::parse({{"y"}}, xy), f);
  const auto m2 = mf_shift(m1);
  const auto sum = mf_direct_sum(m1, m2);
  EXPECT_EQ(sum.a(), PolyMatrix::parse({{"x", "0"}, {"0", "y"}}, xy));
  EXPECT_EQ(mf_direct_sum(m1, MatrixFactorization()), m1);
  EXPECT_EQ(mf_direct_sum(cone_pair(), cone_pair()).size(), 4u);
  EXPECT_EQ(code_of([&] { (void)mf_direct_sum(m1, cone_pair()); }), ErrorCode::RingMismatch);
}

TEST(MfShift, Involution) {
  const auto m = cone_pair();
  EXPECT_EQ(mf_shift(m).a(), m.b());
  EXPECT_EQ(mf_shift(mf_shift(m)), m);
}

TEST(PeriodicTor, ConeLineAgainstItself) {
  const auto m = ideal_module({"x", "z"}, "x*y - z^2", xyz);
  const ThetaModule tm = prepare_theta_module(m);
  const PeriodicTor tor = periodic_tor_lengths(*tm.factorization, m);
  EXPECT_EQ(tor, (PeriodicTor{1, 1}));
  EXPECT_EQ(oracle_tor(*tm.factorization, m), tor);
}

TEST(PeriodicTor, CoordinateAxes) {
  const Poly f = P("x*y", xy);
  const auto mx = mf_validate(PolyMatrix::parse({{"x"}}, xy), PolyMatrix::parse({{"y"}}, xy), f);
  const auto ny = ideal_module({"y"}, "x*y", xy);
  const auto nx = ideal_module({"x"}, "x*y", xy);
  EXPECT_EQ(periodic_tor_lengths(mx, ny), (PeriodicTor{1, 0}));
  EXPECT_EQ(periodic_tor_lengths(mx, nx), (PeriodicTor{0, 1}));
  EXPECT_EQ(oracle_tor(mx, ny), (PeriodicTor{1, 0}));
  EXPECT_EQ(oracle_tor(mx, nx), (PeriodicTor{0, 1}));
}

TEST(Theta, ConeLineVanishes) {
  const auto m = ideal_module({"x", "z"}, "x*y - z^2", xyz);
  const ThetaReport r = theta(m, m);
  EXPECT_EQ(r.theta, 0);
  EXPECT_EQ(r.l_even, 1u);
  EXPECT_EQ(r.l_odd, 1u);
  EXPECT_EQ(r.n, 2u);
  EXPECT_FALSE(r.sign_factor.has_value());
}

TEST(Theta, CoordinateAxes) {
  const auto a = ideal_module({"x"}, "x*y", xy);
  const auto b = ideal_module({"y"}, "x*y", xy);
  EXPECT_EQ(theta(a, b).theta, 1);
  EXPECT_EQ(theta(b, a).theta, 1);
  EXPECT_EQ(theta(a, a).theta, -1);
  EXPECT_EQ(theta(a, b).sign_factor, -1);
}

TEST(Theta, QuadricLines) {
  const char* f = "x*y + z*w";
  const auto xz = ideal_module({"x", "z"}, f, xyzw);
  const auto xw = ideal_module({"x", "w"}, f, xyzw);
  const auto yw = ideal_module({"y", "w"}, f, xyzw);
  EXPECT_EQ(theta(xz, xw).theta, -1);
  EXPECT_EQ(theta(xw, xz).theta, -1);
  EXPECT_EQ(theta(xz, yw).theta, 1);
  EXPECT_EQ(theta(xz, xz).theta, 1);
  EXPECT_EQ(theta(xz, xw).sign_factor, 1);
  const ThetaModule txz = prepare_theta_module(xz);
  const PeriodicTor tor = periodic_tor_lengths(*txz.factorization, xw);
  EXPECT_EQ(oracle_tor(*txz.factorization, xw), tor);
}

TEST(Theta, ArtinianAndFreeVanish) {
  const auto art = ideal_module({"x", "y", "z"}, "x*y - z^2", xyz);
  const auto line = ideal_module({"x", "z"}, "x*y - z^2", xyz);
  EXPECT_EQ(theta(art, line).theta, 0);
  EXPECT_EQ(theta(line, art).theta, 0);
  const auto cube = ideal_module({"x^2", "y^2", "z^2", "x*y", "x*z", "y*z"}, "x*y - z^2", xyz);
  EXPECT_EQ(theta(line, cube).theta, 0);
  const ModulePresentation free(PolyMatrix::parse({{"x*y - z^2"}}, xyz), P("x*y - z^2", xyz));
  const ThetaReport r = theta(free, line);
  EXPECT_EQ(r.theta, 0);
  EXPECT_FALSE(r.notes.empty());
  EXPECT_EQ(theta(line, free).theta, 0);
}

TEST(Theta, ShiftNegates) {
  const Poly f = P("x*y", xy);
  const auto mx = mf_validate(PolyMatrix::parse({{"x"}}, xy), PolyMatrix::parse({{"y"}}, xy), f);
  const auto ny = ideal_module({"y"}, "x*y", xy);
  const long t = theta(ModulePresentation::from_mf(mx), ny).theta;
  EXPECT_EQ(theta(ModulePresentation::from_mf(mf_shift(mx)), ny).theta, -t);
}

TEST(Theta, DirectSumAdditive) {
  const Poly f = P("x*y", xy);
  const auto mx = mf_validate(PolyMatrix::parse({{"x"}}, xy), PolyMatrix::parse({{"y"}}, xy), f);
  const auto my = mf_shift(mx);
  const auto ny = ideal_module({"y"}, "x*y", xy);
  const long sum = theta(ModulePresentation::from_mf(mf_direct_sum(mx, my)), ny).theta;
  EXPECT_EQ(sum, theta(ModulePresentation::from_mf(mx), ny).theta + theta(ModulePresentation::from_mf(my), ny).theta);
}

TEST(Gram, CoordinateAxes) {
  const std::vector<ModulePresentation> mods = {ideal_module({"x"}, "x*y", xy), ideal_module({"y"}, "x*y", xy)};
  const GramVerdict v = gram(mods);
  EXPECT_EQ(v.g, (QMatrix{{-1, 1}, {1, -1}}));
  EXPECT_EQ(v.signed_g, (QMatrix{{1, -1}, {-1, 1}}));
  EXPECT_EQ(v.status, PsdStatus::Psd);
  EXPECT_EQ(v.certificate.rank, 1u);
}

TEST(Gram, QuadricLines) {
  const char* f = "x*y + z*w";
  const std::vector<ModulePresentation> mods = {ideal_module({"x", "z"}, f, xyzw), ideal_module({"x", "w"}, f, xyzw),
                                                ideal_module({"y", "w"}, f, xyzw)};
  const GramVerdict v = gram(mods, 3);
  EXPECT_EQ(v.g, (QMatrix{{1, -1, 1}, {-1, 1, -1}, {1, -1, 1}}));
  EXPECT_EQ(v.status, PsdStatus::Psd);
  EXPECT_EQ(v.certificate.rank, 1u);
}

TEST(Gram, ArtinianOnEvenDimension) {
  const std::vector<ModulePresentation> mods = {ideal_module({"x", "y", "z"}, "x*y - z^2", xyz)};
  const GramVerdict v = gram(mods);
  EXPECT_EQ(v.g, (QMatrix{{0}}));
  EXPECT_EQ(v.status, PsdStatus::NotApplicable);
  EXPECT_FALSE(v.notes.empty());
  EXPECT_TRUE(certify_psd(v.g).psd);
}

TEST(CertifyPsd, Witnesses) {
  const PsdCertificate neg = certify_psd(QMatrix{{1, 2}, {2, 1}});
  ASSERT_FALSE(neg.psd);
  EXPECT_LT(quadratic_form(QMatrix{{1, 2}, {2, 1}}, neg.witness), 0);
  const PsdCertificate zero_block = certify_psd(QMatrix{{0, 1}, {1, 0}});
  ASSERT_FALSE(zero_block.psd);
  EXPECT_LT(quadratic_form(QMatrix{{0, 1}, {1, 0}}, zero_block.witness), 0);
  const PsdCertificate pd = certify_psd(QMatrix{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
  EXPECT_TRUE(pd.psd);
  EXPECT_EQ(pd.rank, 3u);
  const QMatrix deep{{4, 2, 2}, {2, 1, 1}, {2, 1, 0}};
  const PsdCertificate d = certify_psd(deep);
  ASSERT_FALSE(d.psd);
  EXPECT_LT(quadratic_form(deep, d.witness), 0);
}

TEST(IntersectionMultiplicity, Examples) {
  EXPECT_EQ(intersection_multiplicity({P("x", xyzw), P("z", xyzw)}, {P("y", xyzw), P("w", xyzw)}), 1u);
  EXPECT_EQ(intersection_multiplicity({P("y - x^2", xy)}, {P("y", xy)}), 2u);
  EXPECT_EQ(code_of([] {
              (void)intersection_multiplicity({P("x", xyzw), P("z", xyzw)}, {P("x", xyzw), P("w", xyzw)});
            }),
            ErrorCode::NotProper);
}

TEST(HomogeneousThetaFormula, Examples) {
  EXPECT_EQ(homogeneous_theta_formula(2, 1, 1, 1), -1);
  EXPECT_EQ(homogeneous_theta_formula(2, 1, 1, 0), 1);
  EXPECT_EQ(homogeneous_theta_formula(5, 0, 0, 0), 0);
}

}  // namespace
}  // namespace thetalab
