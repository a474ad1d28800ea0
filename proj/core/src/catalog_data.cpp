// Chart and web tables. Formulas use the Expr language; see catalog.cpp for the
// token conventions of the range chains and region clauses.

#include "catalog_data.hpp"

#include "sepweb/minkowski.hpp"

namespace sepweb::data {

namespace {

Operator3 diag(double t, double x, double y) {
  Operator3 a;
  a.m[0][0] = t;
  a.m[1][1] = x;
  a.m[2][2] = y;
  return a;
}

Operator3 kk(const Vec3M& k) { return outer(k, k); }

// Nilpotent J3 on the skew-normal chain (eta, e_y, xi): eta -> 0, e_y -> eta, xi -> e_y.
Operator3 j3(const Vec3M& b2, const Vec3M& b3) { return outer(b2, b3) + outer(b3, b2); }

Operator3 rotation_pair(double b) {
  Operator3 a;
  a.m[0][1] = b;
  a.m[1][0] = -b;
  return a;
}

ConcircularTensor ct(const Operator3& a, const Vec3M& w = {}, double m = 0.0) { return {a, w, m}; }

const Vec3M kNull{1, 1, 0};

}  // namespace

const std::vector<RawWeb>& raw_webs() {
  static const std::vector<RawWeb> webs = {
      {1, "Cartesian web", Family::Cartesian, "spacelike translational web I", nullptr, ParamRule::None, "",
       [](const Params&) { return ct(diag(0, 1, 2)); }},
      {2, "Timelike-cylindrical polar web", Family::Cartesian, "timelike translational web I", nullptr,
       ParamRule::None, "", [](const Params&) { return ct(kk(e_t())); }},
      {3, "Timelike-cylindrical elliptic web", Family::Cartesian, "timelike translational web III", nullptr,
       ParamRule::APositive, "", [](const Params&) { return ct(kk(e_t())); }},
      {4, "Timelike-cylindrical parabolic web", Family::Cartesian, "timelike translational web II", nullptr,
       ParamRule::None, "", [](const Params&) { return ct(kk(e_t())); }},
      {5, "Spacelike-cylindrical Rindler web", Family::Cartesian, "spacelike translational web II", nullptr,
       ParamRule::None, "", [](const Params&) { return ct(kk(e_y())); }},
      {6, "Spacelike-cylindrical elliptic web I", Family::Cartesian, "spacelike translational web VI", nullptr,
       ParamRule::APositive, "", [](const Params&) { return ct(kk(e_y())); }},
      {7, "Spacelike-cylindrical elliptic web II", Family::Cartesian, "spacelike translational web VII", nullptr,
       ParamRule::APositive, "", [](const Params&) { return ct(kk(e_y())); }},
      {8, "Spacelike-cylindrical complex elliptic web", Family::Cartesian, "spacelike translational web VIII",
       nullptr, ParamRule::APositive, "", [](const Params&) { return ct(kk(e_y())); }},
      {9, "Spacelike-cylindrical null elliptic web I", Family::Cartesian, "spacelike translational web IX",
       nullptr, ParamRule::None, "", [](const Params&) { return ct(kk(e_y())); }},
      {10, "Spacelike-cylindrical null elliptic web II", Family::Cartesian, "spacelike translational web X",
       nullptr, ParamRule::None, "", [](const Params&) { return ct(kk(e_y())); }},
      {11, "Spacelike-cylindrical timelike parabolic web", Family::Cartesian, "spacelike translational web III",
       nullptr, ParamRule::None, "", [](const Params&) { return ct(kk(e_y())); }},
      {12, "Spacelike-cylindrical spacelike parabolic web", Family::Cartesian, "spacelike translational web IV",
       nullptr, ParamRule::None, "", [](const Params&) { return ct(kk(e_y())); }},
      {13, "Spacelike-cylindrical null parabolic web", Family::Cartesian, "spacelike translational web V",
       nullptr, ParamRule::None, "", [](const Params&) { return ct(kk(e_y())); }},

      {14, "Dilatational elliptic web I", Family::Central, nullptr, nullptr, ParamRule::UnitPair, "",
       [](const Params&) { return ct({}, {}, 1.0); }},
      {15, "Dilatational elliptic web II", Family::Central, "dilatational web IV", nullptr, ParamRule::UnitPair,
       "", [](const Params&) { return ct({}, {}, 1.0); }},
      {16, "Spherical web I", Family::Central, "timelike rotational web I", nullptr, ParamRule::None, "",
       [](const Params&) { return ct({}, {}, 1.0); }},
      {17, "Spherical web II", Family::Central, "spacelike rotational web I", nullptr, ParamRule::None, "",
       [](const Params&) { return ct({}, {}, 1.0); }},
      {18, "Dilatational complex elliptic web", Family::Central, "dilatational web V", nullptr,
       ParamRule::UnitPair, "maps give (t^2 + x^2, -t^2 + x^2, y); t, x taken on the positive branch",
       [](const Params&) { return ct({}, {}, 1.0); }},
      {19, "Dilatational null elliptic web I", Family::Central, "dilatational web II", nullptr, ParamRule::None,
       "", [](const Params&) { return ct({}, {}, 1.0); }},
      {20, "Dilatational null elliptic web II", Family::Central, "dilatational web III", nullptr,
       ParamRule::None, "", [](const Params&) { return ct({}, {}, 1.0); }},
      {21, "Null spherical web", Family::Central, "null rotational web I", nullptr, ParamRule::None, "",
       [](const Params&) { return ct({}, {}, 1.0); }},
      {22, "Dilatational null elliptic web III", Family::Central, "dilatational web I", nullptr, ParamRule::None,
       "", [](const Params&) { return ct({}, {}, 1.0); }},
      {23, "Elliptic-circular web II", Family::Central, "timelike rotational web IV", nullptr,
       ParamRule::APositive, "", [](const Params& p) { return ct(-p.a * p.a * kk(e_t()), {}, 1.0); }},
      {24, "Elliptic-circular web I", Family::Central, "timelike rotational web III", nullptr,
       ParamRule::APositive, "", [](const Params& p) { return ct(p.a * p.a * kk(e_t()), {}, 1.0); }},
      {25, "Elliptic-hyperbolic web I", Family::Central, "spacelike rotational web III", nullptr,
       ParamRule::APositive, "", [](const Params& p) { return ct(p.a * p.a * kk(e_y()), {}, 1.0); }},
      {26, "Elliptic-hyperbolic web II", Family::Central, "spacelike rotational web IV", nullptr,
       ParamRule::APositive, "", [](const Params& p) { return ct(-p.a * p.a * kk(e_y()), {}, 1.0); }},
      {27, "Parabolically-embedded null elliptic web II", Family::Central, "null rotational web III", nullptr,
       ParamRule::None, "", [](const Params&) { return ct(-1.0 * kk(kNull), {}, 1.0); }},
      {28, "Parabolically-embedded null elliptic web I", Family::Central, "null rotational web II", nullptr,
       ParamRule::None, "", [](const Params&) { return ct(kk(kNull), {}, 1.0); }},

      {29, "Ellipsoidal web I", Family::Central, "asymmetric web IX", "B.1.a", ParamRule::AOrderedB, "",
       [](const Params& p) { return ct(diag(0, p.a, p.b), {}, 1.0); }},
      {30, "Ellipsoidal web II", Family::Central, nullptr, "B.1.d", ParamRule::AOrderedB,
       "four isometrically inequivalent regions",
       [](const Params& p) { return ct(diag(p.a, p.b, 0), {}, 1.0); }},
      {31, "Ellipsoidal web III", Family::Central, nullptr, "B.1.c", ParamRule::AOrderedB,
       "four range rows; the text counts three isometrically inequivalent regions",
       [](const Params& p) { return ct(diag(p.b, p.a, 0), {}, 1.0); }},
      {32, "Complex ellipsoidal web", Family::Central, "asymmetric web X", "B.1.f", ParamRule::BPositive, "",
       [](const Params& p) {
         Operator3 a = rotation_pair(p.b);
         a.m[2][2] = p.c;
         return ct(a, {}, 1.0);
       }},
      {33, "Null ellipsoidal web I", Family::Central, "asymmetric web VIII", "D.1.d", ParamRule::CPositive, "",
       [](const Params& p) { return ct(kk(d_xi()) + p.c * kk(e_y()), {}, 1.0); }},
      {34, "Null ellipsoidal web II", Family::Central, nullptr, nullptr, ParamRule::CPositive, "",
       [](const Params& p) { return ct(kk(d_xi()) - p.c * kk(e_y()), {}, 1.0); }},
      {35, "Null ellipsoidal web III", Family::Central, nullptr, "D.1.a", ParamRule::CPositive, "",
       [](const Params& p) { return ct(-1.0 * kk(d_xi()) + p.c * kk(e_y()), {}, 1.0); }},
      {36, "Null ellipsoidal web IV", Family::Central, nullptr, "D.1.b", ParamRule::CPositive, "",
       [](const Params& p) { return ct(-1.0 * kk(d_xi()) - p.c * kk(e_y()), {}, 1.0); }},
      {37, "Null ellipsoidal web V", Family::Central, "asymmetric web VII", "F.1.a", ParamRule::None, "",
       [](const Params&) { return ct(j3(e_y(), d_xi()), {}, 1.0); }},

      {38, "Timelike parabolic-circular web", Family::NonNullAxial, "timelike rotational web II", nullptr,
       ParamRule::None, "", [](const Params&) { return ct({}, e_t()); }},
      {39, "Timelike paraboloidal web", Family::NonNullAxial, "asymmetric web IV", "C.a", ParamRule::APositive,
       "the ranges 0 < w < a < v < u give a patch equivalent to the first chart (L -> -L)",
       [](const Params& p) { return ct(diag(0, 0, p.a), e_t()); }},
      {40, "Spacelike parabolic-hyperbolic web", Family::NonNullAxial, "spacelike rotational web II", nullptr,
       ParamRule::None, "", [](const Params&) { return ct({}, e_y()); }},
      {41, "Spacelike paraboloidal web", Family::NonNullAxial, "asymmetric web IV", "C.b", ParamRule::APositive,
       "", [](const Params& p) { return ct(diag(p.a, 0, 0), e_y()); }},
      {42, "Spacelike complex-paraboloidal web", Family::NonNullAxial, "asymmetric web VI", "C.d",
       ParamRule::BPositive, "", [](const Params& p) { return ct(rotation_pair(p.b), e_y()); }},
      {43, "Spacelike null-paraboloidal web", Family::NonNullAxial, "asymmetric web III", "F.1.c",
       ParamRule::None, "", [](const Params&) { return ct(kk(d_xi()), e_y()); }},
      {44, "Null paraboloidal web I", Family::NullAxial, "asymmetric web II", "E.1.a", ParamRule::None, "",
       [](const Params&) { return ct(kk(d_xi()), d_eta()); }},
      {45, "Null paraboloidal web II", Family::NullAxial, "asymmetric web I", "G", ParamRule::None, "",
       [](const Params&) { return ct(j3(e_y(), d_xi()), d_eta()); }},
  };
  return webs;
}

namespace {

// Shared formula fragments.
constexpr const char* kQ = "-t^2+x^2+y^2";

}  // namespace

namespace {

// Diagonal metric (s_i - s_j)(s_i - s_k) / (4 B(s_i)) written out per coordinate.
std::array<std::string, 3> ict_metric(const std::string& bu, const std::string& bv, const std::string& bw) {
  return {"(u-v)*(u-w)/(4*" + bu + ")", "(v-u)*(v-w)/(4*" + bv + ")", "(w-u)*(w-v)/(4*" + bw + ")"};
}

std::vector<RawChart> irreducible_charts() {
  const auto m29 = ict_metric("u*(u-a)*(u-b)", "v*(v-a)*(v-b)", "w*(w-a)*(w-b)");
  const auto m32 = ict_metric("(u^2+b^2)*(u-c)", "(v^2+b^2)*(v-c)", "(w^2+b^2)*(w-c)");
  const auto m33 = ict_metric("u^2*(u-c)", "v^2*(v-c)", "w^2*(w-c)");
  const auto m34 = ict_metric("u^2*(u+c)", "v^2*(v+c)", "w^2*(w+c)");
  const auto m37 = ict_metric("u^3", "v^3", "w^3");
  const auto m41 = ict_metric("u*(u-a)", "v*(v-a)", "w*(w-a)");
  const auto m42 = ict_metric("(u^2+b^2)", "(v^2+b^2)", "(w^2+b^2)");
  const std::array<std::string, 3> m39 = {"-(u-v)*(u-w)/(4*u*(u-a))", "(u-v)*(v-w)/(4*v*(v-a))",
                                          "-(u-w)*(v-w)/(4*w*(w-a))"};
  const std::array<std::string, 3> m43 = {"(u-v)*(u-w)/(4*u^2)", "-(u-v)*(v-w)/(4*v^2)", "(v-w)*(u-w)/(4*w^2)"};
  const std::array<std::string, 3> m44 = {"(u-v)*(u-w)/(4*u)", "-(u-v)*(v-w)/(4*v)", "(v-w)*(u-w)/(4*w)"};
  const std::array<std::string, 3> m45 = {"(u-v)*(u-w)/4", "-(u-v)*(v-w)/4", "(u-w)*(v-w)/4"};

  const std::array<std::string, 3> f29 = {"sqrt(-u*v*w/(a*b))", "sqrt((a-u)*(a-v)*(a-w)/(a*(b-a)))",
                                          "sqrt(-(b-u)*(b-v)*(b-w)/(b*(b-a)))"};
  const std::array<std::string, 3> f30 = {"sqrt(-(a-u)*(a-v)*(a-w)/(a*(b-a)))",
                                          "sqrt(-(b-u)*(b-v)*(b-w)/(b*(b-a)))", "sqrt(u*v*w/(a*b))"};
  const std::array<std::string, 3> f31 = {"sqrt((b-u)*(b-v)*(b-w)/(b*(b-a)))", "sqrt((a-u)*(a-v)*(a-w)/(a*(b-a)))",
                                          "sqrt(u*v*w/(a*b))"};
  const std::string l32 =
      "D = (b^2*(u+v+w-c)+c*(u*v+u*w+v*w)-u*v*w)/(b^2+c^2); "
      "S = sqrt(u^2+b^2)*sqrt(v^2+b^2)*sqrt(w^2+b^2)/(b*sqrt(b^2+c^2)); "
      "Y = -(c-u)*(c-v)*(c-w)/(c^2+b^2); T = (u*v*w-b^2*c-b^2*Y)/(2*b*c)";
  const std::array<std::string, 3> f32 = {"sgn(T)*sqrt((S-D)/2)", "sqrt((S+D)/2)", "sqrt(Y)"};
  const std::string s23 = "R = u*v+u*w+v*w; E = u*v*w; ";
  const std::array<std::string, 3> fpm = {"(P-M)/2", "(P+M)/2", ""};
  auto with_y = [&](const std::string& y) { return std::array<std::string, 3>{fpm[0], fpm[1], y}; };
  const std::string yminus = "sqrt(-(c-u)*(c-v)*(c-w)/c^2)";
  const std::string yplus = "sqrt((c+u)*(c+v)*(c+w)/c^2)";
  const std::string l33 = s23 + "P = sqrt(-E/c); M = (R/c-E/c^2)/P";
  const std::string l34 = s23 + "P = sqrt(E/c); M = (-R/c-E/c^2)/P";
  const std::string l35 = s23 + "P = sqrt(E/c); M = (R/c-E/c^2)/P";
  const std::string l36 = s23 + "P = sqrt(-E/c); M = (-R/c-E/c^2)/P";
  const std::string l37 = "P = sqrt(u*v*w); Y = -(u*v+u*w+v*w)/(2*P); M = (u+v+w-Y^2)/P";
  const std::array<std::string, 3> f39 = {"-(u+v+w)/2", "sqrt(u*v*w/a)", "sqrt(-(u-a)*(v-a)*(w-a)/a)"};
  const std::array<std::string, 3> f41 = {"sqrt(-(u-a)*(v-a)*(w-a)/a)", "sqrt(-u*v*w/a)", "(u+v+w)/2"};
  const std::string l42 =
      "D = u*v+u*w+v*w-b^2; S = sqrt(u^2+b^2)*sqrt(v^2+b^2)*sqrt(w^2+b^2)/b; T = (b^2*(u+v+w)-u*v*w)/(2*b)";
  const std::array<std::string, 3> f42 = {"sgn(T)*sqrt((S+D)/2)", "sqrt((S-D)/2)", "(u+v+w)/2"};
  const std::string l43 = "P = sqrt(u*v*w); M = (u*v+u*w+v*w)/P";
  const std::array<std::string, 3> f43 = {"(P+M)/2", "(P-M)/2", "(u+v+w)/2"};
  const std::string l44 = "P = (u^2+v^2+w^2)/8-(u*v+u*w+v*w)/4; M = u+v+w";
  const std::string l45 = "P = (u-v-w)*(u+v-w)*(u-v+w)/16; M = u+v+w; Y = (u^2+v^2+w^2)/8-(u*v+u*w+v*w)/4";

  return {
      {29, 2, "-inf w 0 a v b u inf", "", f29, m29, "", ""},
      {30, 2, "-inf w v 0 a b u inf", "", f30, m29, "", ""},
      {30, 1, "0 w v a b u inf", "", f30, m29, "", ""},
      {30, 2, "0 a w v b u inf", "", f30, m29, "", ""},
      {30, 1, "0 a b w v u inf", "", f30, m29, "", ""},
      {31, 2, "-inf w v 0 u a b", "", f31, m29, "", ""},
      {31, 1, "0 w v u a b", "", f31, m29, "", ""},
      {31, 0, "0 w a v u b", "", f31, m29, "", ""},
      {31, 1, "0 w a b v u inf", "", f31, m29, "", ""},
      {32, 1, "c w v u inf", l32, f32, m32, "", ""},
      {32, 2, "-inf w v c u inf", l32, f32, m32, "", ""},
      {33, 2, "-inf w 0 v c u inf", l33, with_y(yminus), m33, "", ""},
      {34, 1, "-c 0 w v u inf", l34, with_y(yplus), m34, "", ""},
      {34, 1, "-c w v 0 u inf", l34, with_y(yplus), m34, "", ""},
      {35, 1, "0 c w v u inf", l35, with_y(yminus), m33, "", ""},
      {35, 2, "0 w v c u inf", l35, with_y(yminus), m33, "", ""},
      {35, 2, "-inf w v 0 c u inf", l35, with_y(yminus), m33, "", ""},
      {36, 1, "-c w 0 v u inf", l36, with_y(yplus), m34, "", ""},
      {36, 1, "-c w v u 0", l36, with_y(yplus), m34, "", ""},
      {36, 2, "-inf w v -c u 0", l36, with_y(yplus), m34, "", ""},
      {37, 1, "0 w v u inf", l37, with_y("Y"), m37, "", ""},
      {37, 2, "-inf w v 0 u inf", l37, with_y("Y"), m37, "", ""},
      {39, 2, "-inf w v 0 u a", "", f39, m39, "", "a/2, 0, 0"},
      {39, 1, "0 w v u a", "", f39, m39, "", "a/2, 0, 0"},
      {41, 1, "-inf w 0 a v u inf", "", f41, m41, "", "0, 0, -a/2"},
      {41, 0, "-inf w 0 v u a", "", f41, m41, "", "0, 0, -a/2"},
      {41, 1, "-inf w v u 0", "", f41, m41, "", "0, 0, -a/2"},
      {42, 1, "-inf w v u inf", l42, f42, m42, "", ""},
      {43, 1, "0 w v u inf", l43, f43, m43, "", ""},
      {43, 1, "-inf w v 0 u inf", l43, f43, m43, "", ""},
      {44, 1, "0 w v u inf", l44, with_y("sqrt(u*v*w)"), m44, "", ""},
      {44, 2, "-inf w v 0 u inf", l44, with_y("sqrt(u*v*w)"), m44, "", ""},
      {45, 1, "-inf w v u inf", l45, with_y("Y"), m45, "", ""},
  };
}

}  // namespace

const std::vector<RawChart>& raw_charts() {
  using std::string;
  const string q = kQ;
  static const std::vector<RawChart> charts = {
      // Cartesian family
      {1, 0, "-inf u inf; -inf v inf; -inf w inf", "", {"u", "v", "w"}, {"-1", "1", "1"}, "", ""},
      {2, 0, "-inf u inf; 0 v inf; 0 w 2*pi", "", {"u", "v*cos(w)", "v*sin(w)"}, {"-1", "1", "v^2"}, "", ""},
      {3, 0, "-inf u inf; 0 v inf; 0 w 2*pi", "G = a^2*(cosh(v)^2-cos(w)^2)",
       {"u", "a*cosh(v)*cos(w)", "a*sinh(v)*sin(w)"}, {"-1", "G", "G"}, "", ""},
      {4, 0, "-inf u inf; 0 v inf; -inf w inf", "", {"u", "(v^2-w^2)/2", "v*w"}, {"-1", "v^2+w^2", "v^2+w^2"},
       "", ""},
      {5, 0, "0 u inf; -inf v inf; -inf w inf", "", {"u*cosh(v)", "u*sinh(v)", "w"}, {"-1", "u^2", "1"},
       "-t^2+x^2 < 0", ""},
      {5, 1, "0 u inf; -inf v inf; -inf w inf", "", {"u*sinh(v)", "u*cosh(v)", "w"}, {"1", "-u^2", "1"},
       "-t^2+x^2 > 0", ""},
      {6, 1, "0 u inf; 0 v inf; -inf w inf", "G = a^2*(cosh(u)^2+sinh(v)^2)",
       {"a*cosh(u)*sinh(v)", "a*cosh(v)*sinh(u)", "w"}, {"G", "-G", "1"}, "", ""},
      {7, 1, "0 u v inf; -inf w inf", "G = a^2*(cosh(v)^2-cosh(u)^2)",
       {"a*cosh(u)*cosh(v)", "a*sinh(v)*sinh(u)", "w"}, {"G", "-G", "1"}, "abs(t)-abs(x) > a", ""},
      {7, 1, "0 v u inf; -inf w inf", "G = a^2*(cosh(u)^2-cosh(v)^2)",
       {"a*sinh(u)*sinh(v)", "a*cosh(v)*cosh(u)", "w"}, {"G", "-G", "1"}, "abs(t)-abs(x) < -a", ""},
      {7, 0, "0 v u pi/2; -inf w inf", "G = a^2*(cos(u)^2-cos(v)^2)", {"a*cos(u)*cos(v)", "a*sin(v)*sin(u)", "w"},
       {"G", "-G", "1"}, "abs(t)+abs(x) < a", ""},
      {8, 0, "0 |v| u inf; -inf w inf", "P = a*sinh(u-v); M = a*cosh(u+v); G = a^2*(sinh(2*u)+sinh(2*v))/2",
       {"(P+M)/2", "(P-M)/2", "w"}, {"-G", "G", "1"}, "", ""},
      {9, 0, "-inf u inf; -inf v inf; -inf w inf", "P = 2*sinh(u-v); M = exp(u+v); G = exp(2*u)+exp(2*v)",
       {"(P+M)/2", "(P-M)/2", "w"}, {"-G", "G", "1"}, "", ""},
      {10, 1, "-inf v u inf; -inf w inf", "P = 2*cosh(u-v); M = -exp(u+v); G = exp(2*u)-exp(2*v)",
       {"(P+M)/2", "(P-M)/2", "w"}, {"G", "-G", "1"}, "-t^2+x^2 > abs(t-x)", ""},
      {10, 1, "-inf u v inf; -inf w inf", "P = 2*cosh(u-v); M = exp(u+v); G = exp(2*v)-exp(2*u)",
       {"(P+M)/2", "(P-M)/2", "w"}, {"G", "-G", "1"}, "-t^2+x^2 < -abs(t-x)", ""},
      {11, 0, "0 v u inf; -inf w inf", "", {"(u^2+v^2)/2", "u*v", "w"}, {"-(u^2-v^2)", "u^2-v^2", "1"}, "", ""},
      {12, 1, "0 v u inf; -inf w inf", "", {"u*v", "(u^2+v^2)/2", "w"}, {"u^2-v^2", "-(u^2-v^2)", "1"}, "", ""},
      {13, 1, "0 |v| u inf; -inf w inf", "P = u+v; M = -(u-v)^2/2", {"(P+M)/2", "(P-M)/2", "w"},
       {"u-v", "-(u-v)", "1"}, "", ""},

      // Central, reducible
      {14, 0, "0 u K(a); 0 v K(a); 0 w inf", "G = w^2*(dc(u,a)^2-a^2*sn(v,a)^2)",
       {"w*sc(u,a)*dn(v,a)", "w*nc(u,a)*cn(v,a)", "w*dc(u,a)*sn(v,a)"}, {"-G", "G", "1"}, q + " > 0", ""},
      {14, 0, "0 u inf; 0 v K(a); 0 w K(b)", "G = u^2*(a^2*cd(v,a)^2+cs(w,b)^2)",
       {"u*nd(v,a)*ns(w,b)", "u*sd(v,a)*ds(w,b)", "u*cd(v,a)*cs(w,b)"}, {"-1", "G", "G"}, q + " < 0", ""},
      {15, 0, "0 v u K(a); 0 w inf", "G = w^2*(dc(u,a)^2-dc(v,a)^2)",
       {"w*b/a*nc(u,a)*nc(v,a)", "w*b*sc(u,a)*sc(v,a)", "w/a*dc(u,a)*dc(v,a)"}, {"-G", "G", "1"},
       q + " > 0; a*abs(t)-abs(x) > b*sqrt(" + q + ")", ""},
      {15, 1, "0 v u K(b); 0 w inf", "G = w^2*a^2*(nd(u,b)^2-nd(v,b)^2)",
       {"w*a*b*sd(u,b)*sd(v,b)", "w*b*cd(u,b)*cd(v,b)", "w*a*nd(u,b)*nd(v,b)"}, {"G", "-G", "1"},
       q + " > 0; a*abs(t)+abs(x) < b*sqrt(" + q + ")", ""},
      {15, 0, "0 u inf; 0 v K(a); 0 w K(b)", "G = u^2*(dc(v,a)^2+a^2*sc(w,b)^2)",
       {"u*nc(v,a)*nc(w,b)", "u*sc(v,a)*dc(w,b)", "u*dc(v,a)*sc(w,b)"}, {"-1", "G", "G"}, q + " < 0", ""},
      {16, 0, "-inf u inf; 0 v 2*pi; 0 w inf", "", {"w*sinh(u)", "w*cosh(u)*cos(v)", "w*cosh(u)*sin(v)"},
       {"-w^2", "w^2*cosh(u)^2", "1"}, q + " > 0", ""},
      {16, 0, "0 u inf; 0 v inf; 0 w 2*pi", "", {"u*cosh(v)", "u*sinh(v)*cos(w)", "u*sinh(v)*sin(w)"},
       {"-1", "u^2", "u^2*sinh(v)^2"}, q + " < 0", ""},
      {17, 1, "0 u pi; -inf v inf; 0 w inf", "", {"w*sin(u)*sinh(v)", "w*sin(u)*cosh(v)", "w*cos(u)"},
       {"w^2", "-w^2*sin(u)^2", "1"}, q + " > 0; -t^2+x^2 > 0", ""},
      {17, 0, "0 u inf; -inf v inf; 0 w inf", "", {"w*sinh(u)*cosh(v)", "w*sinh(u)*sinh(v)", "w*cosh(u)"},
       {"-w^2", "w^2*sinh(u)^2", "1"}, q + " > 0; -t^2+x^2 < 0", ""},
      {17, 0, "0 u inf; -inf v inf; -inf w inf", "", {"u*cosh(v)*cosh(w)", "u*cosh(v)*sinh(w)", "u*sinh(v)"},
       {"-1", "u^2", "u^2*cosh(v)^2"}, q + " < 0", ""},
      {18, 0, "0 v u K(a); 0 w inf",
       "S = 2*w^2*dn(2*u,a)*dn(2*v,a)/(a*b*(1+cn(2*u,a))*(1+cn(2*v,a))); "
       "D = 2*w^2*(cn(2*u,a)+cn(2*v,a))/((1+cn(2*u,a))*(1+cn(2*v,a))); "
       "G = w^2*((sn(u,a)*dc(u,a))^2-(sn(v,a)*dc(v,a))^2)",
       {"sqrt((S-D)/2)", "sqrt((S+D)/2)", "w*sn(u,a)*dc(u,a)*sn(v,a)*dc(v,a)"}, {"-G", "G", "1"}, q + " > 0", ""},
      {18, 0, "0 u inf; 0 v K(a); 0 w K(b)",
       "S = 2*u^2*dn(2*v,a)*dn(2*w,b)/(a*b*(1+cn(2*v,a))*(1+cn(2*w,b))); "
       "D = 2*u^2*(1+cn(2*v,a)*cn(2*w,b))/((1+cn(2*v,a))*(1+cn(2*w,b))); "
       "G = u^2*((sn(v,a)*dc(v,a))^2+(sn(w,b)*dc(w,b))^2)",
       {"sqrt((S+D)/2)", "sqrt((S-D)/2)", "u*sn(v,a)*dc(v,a)*sn(w,b)*dc(w,b)"}, {"-1", "G", "G"}, q + " < 0", ""},
      {19, 1, "0 u inf; 0 v inf; 0 w inf",
       "P = w*sech(u)*csch(v); M = w*cosh(u)*sinh(v)*(1-tanh(u)^2*coth(v)^2); G = w^2*(sech(u)^2+csch(v)^2)",
       {"(P-M)/2", "(P+M)/2", "w*tanh(u)*coth(v)"}, {"G", "-G", "1"}, q + " > 0", ""},
      {19, 0, "0 u inf; 0 v pi/2; 0 w inf",
       "P = u*sec(v)*sech(w); M = u*cos(v)*cosh(w)*(1+tan(v)^2*tanh(w)^2); G = u^2*(sec(v)^2-sech(w)^2)",
       {"(P+M)/2", "(P-M)/2", "u*tan(v)*tanh(w)"}, {"-1", "G", "G"}, q + " < 0", ""},
      {20, 0, "0 v u pi/2; 0 w inf",
       "P = w*sec(u)*sec(v); M = -w*cos(u)*cos(v)*(1-tan(u)^2*tan(v)^2); G = w^2*(sec(u)^2-sec(v)^2)",
       {"(P+M)/2", "(P-M)/2", "w*tan(u)*tan(v)"}, {"-G", "G", "1"},
       q + " > 0; abs(x) > sqrt(" + q + "); t*x > 0", ""},
      {20, 1, "0 v u inf; 0 w inf",
       "P = w*csch(u)*csch(v); M = -w*sinh(u)*sinh(v)*(1-coth(u)^2*coth(v)^2); G = w^2*(csch(v)^2-csch(u)^2)",
       {"(P+M)/2", "(P-M)/2", "w*coth(u)*coth(v)"}, {"G", "-G", "1"},
       q + " > 0; abs(x) > sqrt(" + q + "); t*x < 0; abs(y) > sqrt(" + q + ")", ""},
      {20, 1, "0 u v inf; 0 w inf",
       "P = w*sech(u)*sech(v); M = -w*cosh(u)*cosh(v)*(1-tanh(u)^2*tanh(v)^2); G = w^2*(sech(u)^2-sech(v)^2)",
       {"(P+M)/2", "(P-M)/2", "w*tanh(u)*tanh(v)"}, {"G", "-G", "1"},
       q + " > 0; abs(x) > sqrt(" + q + "); t*x < 0; abs(y) < sqrt(" + q + ")", ""},
      {20, 0, "0 u inf; 0 v inf; 0 w pi/2",
       "P = u*csch(v)/cos(w); M = u*sinh(v)*cos(w)*(1+coth(v)^2*tan(w)^2); G = u^2*(csch(v)^2+sec(w)^2)",
       {"(P+M)/2", "(P-M)/2", "u*coth(v)*tan(w)"}, {"-1", "G", "G"}, q + " < 0", ""},
      {21, 0, "-inf u inf; -inf v inf; 0 w inf", "P = w*(exp(-u)-v^2*exp(u)); M = -w*exp(u)",
       {"(P+M)/2", "(P-M)/2", "w*v*exp(u)"}, {"-w^2", "w^2*exp(2*u)", "1"}, q + " > 0", ""},
      {21, 0, "0 u inf; -inf v inf; -inf w inf", "P = u*exp(v); M = u*(exp(-v)+w^2*exp(v))",
       {"(P+M)/2", "(P-M)/2", "u*w*exp(v)"}, {"-1", "u^2", "u^2*exp(2*v)"}, q + " < 0", ""},
      {22, 0, "0 u v inf; 0 w inf", "P = w/(u*v); M = w*(u^2-v^2)^2/(4*u*v); G = w^2*(1/u^2-1/v^2)",
       {"(P+M)/2", "(P-M)/2", "w*(u^2+v^2)/(2*u*v)"}, {"-G", "G", "1"}, q + " > 0", ""},
      {22, 0, "0 u inf; 0 v inf; 0 w inf", "P = u/(v*w); M = u*(v^2+w^2)^2/(4*v*w); G = u^2*(1/v^2+1/w^2)",
       {"(P+M)/2", "(P-M)/2", "u*(w^2-v^2)/(2*v*w)"}, {"-1", "G", "G"}, q + " < 0", ""},
      {23, 1, "0 u v inf; 0 w 2*pi", "G = a^2*(cosh(v)^2-cosh(u)^2)",
       {"a*cosh(u)*cosh(v)", "a*sinh(v)*sinh(u)*cos(w)", "a*sinh(v)*sinh(u)*sin(w)"},
       {"G", "-G", "a^2*sinh(v)^2*sinh(u)^2"}, "abs(t)-sqrt(x^2+y^2) > a", ""},
      {23, 1, "0 v u inf; 0 w 2*pi", "G = a^2*(cosh(u)^2-cosh(v)^2)",
       {"a*sinh(v)*sinh(u)", "a*cosh(u)*cosh(v)*cos(w)", "a*cosh(u)*cosh(v)*sin(w)"},
       {"G", "-G", "a^2*cosh(v)^2*cosh(u)^2"}, "abs(t)-sqrt(x^2+y^2) < -a", ""},
      {23, 0, "0 v u pi/2; 0 w 2*pi", "G = a^2*(cos(u)^2-cos(v)^2)",
       {"a*cos(u)*cos(v)", "a*sin(v)*sin(u)*cos(w)", "a*sin(v)*sin(u)*sin(w)"},
       {"G", "-G", "a^2*sin(u)^2*sin(v)^2"}, "abs(t)+sqrt(x^2+y^2) < a", ""},
      {24, 1, "0 u inf; 0 v inf; 0 w 2*pi", "G = a^2*(cosh(u)^2+sinh(v)^2)",
       {"a*cosh(u)*sinh(v)", "a*cosh(v)*sinh(u)*cos(w)", "a*cosh(v)*sinh(u)*sin(w)"},
       {"G", "-G", "a^2*cosh(v)^2*sinh(u)^2"}, "", ""},
      {25, 0, "0 u inf; 0 v inf; 0 w pi/2", "G = a^2*(cosh(v)^2-cos(w)^2)",
       {"a*sinh(u)*cosh(v)*cos(w)", "a*cosh(u)*cosh(v)*cos(w)", "a*sinh(v)*sin(w)"},
       {"-a^2*cosh(v)^2*cos(w)^2", "G", "G"}, "-t^2+x^2 > 0", ""},
      {25, 1, "0 u inf; 0 v inf; 0 w inf", "G = a^2*(cosh(u)^2+sinh(v)^2)",
       {"a*cosh(u)*sinh(v)*cosh(w)", "a*cosh(u)*sinh(v)*sinh(w)", "a*sinh(u)*cosh(v)"},
       {"G", "-G", "a^2*cosh(u)^2*sinh(v)^2"}, "-t^2+x^2 < 0", ""},
      {26, 0, "0 u inf; 0 v inf; 0 w pi", "G = a^2*(cosh(v)^2-cos(w)^2)",
       {"a*sinh(u)*sinh(v)*sin(w)", "a*cosh(u)*sinh(v)*sin(w)", "a*cosh(v)*cos(w)"},
       {"-a^2*sinh(v)^2*sin(w)^2", "G", "G"}, "-t^2+x^2 > 0", ""},
      {26, 1, "0 u v inf; 0 w inf", "G = a^2*(cosh(v)^2-cosh(u)^2)",
       {"a*cosh(u)*cosh(v)*cosh(w)", "a*cosh(u)*cosh(v)*sinh(w)", "a*sinh(u)*sinh(v)"},
       {"G", "-G", "a^2*cosh(u)^2*cosh(v)^2"}, "-t^2+x^2 < 0; sqrt(t^2-x^2)-abs(y) > a", ""},
      {26, 1, "0 v u inf; 0 w inf", "G = a^2*(cosh(u)^2-cosh(v)^2)",
       {"a*sinh(u)*sinh(v)*cosh(w)", "a*sinh(u)*sinh(v)*sinh(w)", "a*cosh(u)*cosh(v)"},
       {"G", "-G", "a^2*sinh(u)^2*sinh(v)^2"}, "-t^2+x^2 < 0; sqrt(t^2-x^2)-abs(y) < -a", ""},
      {26, 0, "0 v u pi/2; 0 w inf", "G = a^2*(cos(u)^2-cos(v)^2)",
       {"a*cos(u)*cos(v)*cosh(w)", "a*cos(u)*cos(v)*sinh(w)", "a*sin(u)*sin(v)"},
       {"G", "-G", "a^2*cos(u)^2*cos(v)^2"}, "-t^2+x^2 < 0; sqrt(t^2-x^2)+abs(y) < a", ""},
      {27, 1, "-inf v u inf; -inf w inf",
       "P = 2*cosh(u-v)-w^2*exp(u+v); M = -exp(u+v); G = exp(2*u)-exp(2*v)", {"(P+M)/2", "(P-M)/2", "w*exp(u+v)"},
       {"G", "-G", "exp(2*(u+v))"}, q + " > abs(t-x)", ""},
      {27, 1, "-inf u v inf; -inf w inf",
       "P = 2*cosh(u-v)+w^2*exp(u+v); M = exp(u+v); G = exp(2*v)-exp(2*u)", {"(P+M)/2", "(P-M)/2", "w*exp(u+v)"},
       {"G", "-G", "exp(2*(u+v))"}, q + " < -abs(t-x)", ""},
      {28, 0, "-inf u inf; -inf v inf; -inf w inf",
       "P = 2*sinh(u-v)+w^2*exp(u+v); M = exp(u+v); G = exp(2*u)+exp(2*v)", {"(P+M)/2", "(P-M)/2", "w*exp(u+v)"},
       {"-G", "G", "exp(2*(u+v))"}, "", ""},

      // Non-null axial, reducible
      {38, 0, "0 v u inf; 0 w 2*pi", "", {"(u^2+v^2)/2", "u*v*cos(w)", "u*v*sin(w)"},
       {"-(u^2-v^2)", "u^2-v^2", "u^2*v^2"}, "", ""},
      {40, 0, "-inf u inf; 0 v inf; 0 w inf", "", {"v*w*sinh(u)", "v*w*cosh(u)", "(v^2-w^2)/2"},
       {"-v^2*w^2", "v^2+w^2", "v^2+w^2"}, q + " > 0; -t^2+x^2 > 0", ""},
      {40, 1, "0 v u inf; -inf w inf", "", {"u*v*cosh(w)", "u*v*sinh(w)", "(u^2+v^2)/2"},
       {"u^2-v^2", "-(u^2-v^2)", "u^2*v^2"}, q + " > 0; -t^2+x^2 < 0", ""},
  };
  static const std::vector<RawChart> all = [] {
    std::vector<RawChart> v = charts;
    const auto irr = irreducible_charts();
    v.insert(v.end(), irr.begin(), irr.end());
    return v;
  }();
  return all;
}

}  // namespace sepweb::data
