#include "fgr/time/tableau.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "fgr/errors.hpp"

namespace fgr {

namespace {

using Matrix = std::vector<std::vector<double>>;

Matrix zeros(int s) { return Matrix(s, std::vector<double>(s, 0.0)); }

void check_shape(const ArkTableau& t) {
  const auto s = static_cast<std::size_t>(t.stages);
  auto square = [s](const Matrix& a) {
    return a.size() == s &&
           std::all_of(a.begin(), a.end(), [s](const auto& r) { return r.size() == s; });
  };
  if (t.stages < 1 || !square(t.a_explicit) || !square(t.a_implicit) ||
      t.b.size() != s || t.c.size() != s) {
    throw ContractViolation("tableau '" + t.name + "': inconsistent dimensions");
  }
}

std::vector<double> mat_vec(const Matrix& a, const std::vector<double>& x) {
  std::vector<double> y(x.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  }
  return y;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Order conditions through order q for a single matrix with weights b and
// abscissae c. The coupling conditions of an additive pair up to order 3
// reduce to these once both matrices have row sums c.
double order_residual(const Matrix& a, const std::vector<double>& b,
                      const std::vector<double>& c, int q) {
  double r = 0.0;
  if (q >= 2) r = std::max(r, std::abs(dot(b, c) - 0.5));
  if (q >= 3) {
    std::vector<double> c2(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) c2[i] = c[i] * c[i];
    r = std::max(r, std::abs(dot(b, c2) - 1.0 / 3.0));
    r = std::max(r, std::abs(dot(b, mat_vec(a, c)) - 1.0 / 6.0));
  }
  return r;
}

}  // namespace

bool ArkTableau::has_implicit_part() const {
  for (const auto& row : a_implicit) {
    for (double x : row) {
      if (x != 0.0) return true;
    }
  }
  return false;
}

double TableauDiagnostics::max_residual() const {
  return std::max({row_sum_explicit, row_sum_implicit, weight_sum, order_conditions});
}

bool TableauDiagnostics::ok(double tol) const {
  return explicit_strictly_lower && implicit_lower && max_residual() <= tol;
}

TableauDiagnostics validate_tableau(const ArkTableau& t) {
  check_shape(t);
  TableauDiagnostics d;
  const int s = t.stages;
  for (int i = 0; i < s; ++i) {
    double se = 0.0;
    double si = 0.0;
    for (int j = 0; j < s; ++j) {
      se += t.a_explicit[i][j];
      si += t.a_implicit[i][j];
      if (j >= i && t.a_explicit[i][j] != 0.0) d.explicit_strictly_lower = false;
      if (j > i && t.a_implicit[i][j] != 0.0) d.implicit_lower = false;
    }
    d.row_sum_explicit = std::max(d.row_sum_explicit, std::abs(se - t.c[i]));
    if (t.has_implicit_part()) {
      d.row_sum_implicit = std::max(d.row_sum_implicit, std::abs(si - t.c[i]));
    }
  }
  double sb = 0.0;
  for (double x : t.b) sb += x;
  d.weight_sum = std::abs(sb - 1.0);
  const int q = std::min(t.order, 3);
  d.order_conditions = order_residual(t.a_explicit, t.b, t.c, q);
  if (t.has_implicit_part()) {
    d.order_conditions =
        std::max(d.order_conditions, order_residual(t.a_implicit, t.b, t.c, q));
  }
  return d;
}

ArkTableau ark4_tableau() {
  ArkTableau t;
  t.name = "ark4";
  t.stages = 6;
  t.order = 4;
  t.b = {82889.0 / 524892.0, 0.0, 15625.0 / 83664.0, 69875.0 / 102672.0,
         -2260.0 / 8211.0, 0.25};
  t.c = {0.0, 0.5, 83.0 / 250.0, 31.0 / 50.0, 17.0 / 20.0, 1.0};
  auto& e = t.a_explicit = zeros(6);
  e[1][0] = 0.5;
  e[2][0] = 13861.0 / 62500.0;
  e[2][1] = 6889.0 / 62500.0;
  e[3][0] = -116923316275.0 / 2393684061468.0;
  e[3][1] = -2731218467317.0 / 15368042101831.0;
  e[3][2] = 9408046702089.0 / 11113171139209.0;
  e[4][0] = -451086348788.0 / 2902428689909.0;
  e[4][1] = -2682348792572.0 / 7519795681897.0;
  e[4][2] = 12662868775082.0 / 11960479115383.0;
  e[4][3] = 3355817975965.0 / 11060851509271.0;
  e[5][0] = 647845179188.0 / 3216320057751.0;
  e[5][1] = 73281519250.0 / 8382639484533.0;
  e[5][2] = 552539513391.0 / 3454668386233.0;
  e[5][3] = 3354512671639.0 / 8306763924573.0;
  e[5][4] = 4040.0 / 17871.0;
  auto& a = t.a_implicit = zeros(6);
  a[1][0] = 0.25;
  a[2][0] = 8611.0 / 62500.0;
  a[2][1] = -1743.0 / 31250.0;
  a[3][0] = 5012029.0 / 34652500.0;
  a[3][1] = -654441.0 / 2922500.0;
  a[3][2] = 174375.0 / 388108.0;
  a[4][0] = 15267082809.0 / 155376265600.0;
  a[4][1] = -71443401.0 / 120774400.0;
  a[4][2] = 730878875.0 / 902184768.0;
  a[4][3] = 2285395.0 / 8070912.0;
  for (int j = 0; j < 5; ++j) a[5][j] = t.b[j];
  for (int i = 1; i < 6; ++i) a[i][i] = 0.25;
  return t;
}

ArkTableau ark5_2003_tableau() {
  ArkTableau t;
  t.name = "ark5-2003";
  t.stages = 8;
  t.order = 5;
  const double g = 41.0 / 200.0;
  t.b = {-872700587467.0 / 9133579230613.0,
         0.0,
         0.0,
         22348218063261.0 / 9555858737531.0,
         -1143369518992.0 / 8141816002931.0,
         -39379526789629.0 / 19018526304540.0,
         32727382324388.0 / 42900044865799.0,
         g};
  t.c = {0.0,
         41.0 / 100.0,
         2935347310677.0 / 11292855782101.0,
         1426016391358.0 / 7196633302097.0,
         92.0 / 100.0,
         24.0 / 100.0,
         3.0 / 5.0,
         1.0};
  auto& e = t.a_explicit = zeros(8);
  e[1][0] = 41.0 / 100.0;
  e[2][0] = 367902744464.0 / 2072280473677.0;
  e[2][1] = 677623207551.0 / 8224143866563.0;
  e[3][0] = 1268023523408.0 / 10340822734521.0;
  e[3][2] = 1029933939417.0 / 13636558850479.0;
  e[4][0] = 14463281900351.0 / 6315353703477.0;
  e[4][2] = 66114435211212.0 / 5879490589093.0;
  e[4][3] = -54053170152839.0 / 4284798021562.0;
  e[5][0] = 14090043504691.0 / 34967701212078.0;
  e[5][2] = 15191511035443.0 / 11219624916014.0;
  e[5][3] = -18461159152457.0 / 12425892160975.0;
  e[5][4] = -281667163811.0 / 9011619295870.0;
  e[6][0] = 19230459214898.0 / 13134317526959.0;
  e[6][2] = 21275331358303.0 / 2942455364971.0;
  e[6][3] = -38145345988419.0 / 4862620318723.0;
  e[6][4] = -1.0 / 8.0;
  e[6][5] = -1.0 / 8.0;
  e[7][0] = -19977161125411.0 / 11928030595625.0;
  e[7][2] = -40795976796054.0 / 6384907823539.0;
  e[7][3] = 177454434618887.0 / 12078138498510.0;
  e[7][4] = 782672205425.0 / 8267701900261.0;
  e[7][5] = -69563011059811.0 / 9646580694205.0;
  e[7][6] = 7356628210526.0 / 4942186776405.0;
  auto& a = t.a_implicit = zeros(8);
  a[1][0] = g;
  a[2][0] = 41.0 / 400.0;
  a[2][1] = -567603406766.0 / 11931857230679.0;
  a[3][0] = 683785636431.0 / 9252920307686.0;
  a[3][2] = -110385047103.0 / 1367015193373.0;
  a[4][0] = 3016520224154.0 / 10081342136671.0;
  a[4][2] = 30586259806659.0 / 12414158314087.0;
  a[4][3] = -22760509404356.0 / 11113319521817.0;
  a[5][0] = 218866479029.0 / 1489978393911.0;
  a[5][2] = 638256894668.0 / 5436446318841.0;
  a[5][3] = -1179710474555.0 / 5321154724896.0;
  a[5][4] = -60928119172.0 / 8023461067671.0;
  a[6][0] = 1020004230633.0 / 5715676835656.0;
  a[6][2] = 25762820946817.0 / 25263940353407.0;
  a[6][3] = -2161375909145.0 / 9755907335909.0;
  a[6][4] = -211217309593.0 / 5846859502534.0;
  a[6][5] = -4269925059573.0 / 7827059040749.0;
  for (int j = 0; j < 7; ++j) a[7][j] = t.b[j];
  for (int i = 1; i < 8; ++i) a[i][i] = g;
  return t;
}

ArkTableau ark437_tableau() {
  ArkTableau t;
  t.name = "ark437";
  t.stages = 7;
  t.order = 4;
  const double g = 1235.0 / 10000.0;
  t.b = {0.0,
         0.0,
         9164257142617.0 / 17756377923965.0,
         -10812980402763.0 / 74029279521829.0,
         1335994250573.0 / 5691609445217.0,
         2273837961795.0 / 8368240463276.0,
         g};
  t.c = {0.0,  247.0 / 1000.0, 4276536705230.0 / 10142255878289.0, 67.0 / 200.0,
         3.0 / 40.0, 7.0 / 10.0, 1.0};
  auto& e = t.a_explicit = zeros(7);
  e[1][0] = 247.0 / 1000.0;
  e[2][0] = 247.0 / 4000.0;
  e[2][1] = 2694949928731.0 / 7487940209513.0;
  e[3][0] = 464650059369.0 / 8764239774964.0;
  e[3][1] = 878889893998.0 / 2444806327765.0;
  e[3][2] = -952945855348.0 / 12294611323341.0;
  e[4][0] = 476636172619.0 / 8159180917465.0;
  e[4][1] = -1271469283451.0 / 7793814740893.0;
  e[4][2] = -859560642026.0 / 4356155882851.0;
  e[4][3] = 1723805262919.0 / 4571918432560.0;
  e[5][0] = 6338158500785.0 / 11769362343261.0;
  e[5][1] = -4970555480458.0 / 10924838743837.0;
  e[5][2] = 3326578051521.0 / 2647936831840.0;
  e[5][3] = -880713585975.0 / 1841400956686.0;
  e[5][4] = -1428733748635.0 / 8843423958496.0;
  e[6][0] = 760814592956.0 / 3276306540349.0;
  e[6][1] = 760814592956.0 / 3276306540349.0;
  e[6][2] = -47223648122716.0 / 6934462133451.0;
  e[6][3] = 71187472546993.0 / 9669769126921.0;
  e[6][4] = -13330509492149.0 / 9695768672337.0;
  e[6][5] = 11565764226357.0 / 8513123442827.0;
  auto& a = t.a_implicit = zeros(7);
  a[1][0] = g;
  a[2][0] = a[2][1] = 624185399699.0 / 4186980696204.0;
  a[3][0] = a[3][1] = 1258591069120.0 / 10082082980243.0;
  a[3][2] = -322722984531.0 / 8455138723562.0;
  a[4][0] = a[4][1] = -436103496990.0 / 5971407786587.0;
  a[4][2] = -2689175662187.0 / 11046760208243.0;
  a[4][3] = 4431412449334.0 / 12995360898505.0;
  a[5][0] = a[5][1] = -2207373168298.0 / 14430576638973.0;
  a[5][2] = 242511121179.0 / 3358618340039.0;
  a[5][3] = 3145666661981.0 / 7780404714551.0;
  a[5][4] = 5882073923981.0 / 14490790706663.0;
  for (int j = 0; j < 6; ++j) a[6][j] = t.b[j];
  for (int i = 1; i < 7; ++i) a[i][i] = g;
  return t;
}

ArkTableau ark5_tableau() {
  ArkTableau t;
  t.name = "ark5";
  t.stages = 8;
  t.order = 5;
  const double g = 2.0 / 9.0;
  t.b = {0.0,
         0.0,
         3517720773327.0 / 20256071687669.0,
         4569610470461.0 / 17934693873752.0,
         2819471173109.0 / 11655438449929.0,
         3296210113763.0 / 10722700128969.0,
         -1142099968913.0 / 5710983926999.0,
         g};
  t.c = {0.0,
         4.0 / 9.0,
         6456083330201.0 / 8509243623797.0,
         1632083962415.0 / 14158861528103.0,
         6365430648612.0 / 17842476412687.0,
         18.0 / 25.0,
         191.0 / 200.0,
         1.0};
  auto& e = t.a_explicit = zeros(8);
  e[1][0] = 4.0 / 9.0;
  e[2][0] = 1.0 / 9.0;
  e[2][1] = 1183333538310.0 / 1827251437969.0;
  e[3][0] = 895379019517.0 / 9750411845327.0;
  e[3][1] = 477606656805.0 / 13473228687314.0;
  e[3][2] = -112564739183.0 / 9373365219272.0;
  e[4][0] = -4458043123994.0 / 13015289567637.0;
  e[4][1] = -2500665203865.0 / 9342069639922.0;
  e[4][2] = 983347055801.0 / 8893519644487.0;
  e[4][3] = 2185051477207.0 / 2551468980502.0;
  e[5][0] = -167316361917.0 / 17121522574472.0;
  e[5][1] = 1605541814917.0 / 7619724128744.0;
  e[5][2] = 991021770328.0 / 13052792161721.0;
  e[5][3] = 2342280609577.0 / 11279663441611.0;
  e[5][4] = 3012424348531.0 / 12792462456678.0;
  e[6][0] = 6680998715867.0 / 14310383562358.0;
  e[6][1] = 5029118570809.0 / 3897454228471.0;
  e[6][2] = 2415062538259.0 / 6382199904604.0;
  e[6][3] = -3924368632305.0 / 6964820224454.0;
  e[6][4] = -4331110370267.0 / 15021686902756.0;
  e[6][5] = -3944303808049.0 / 11994238218192.0;
  e[7][0] = 2193717860234.0 / 3570523412979.0;
  e[7][1] = 2193717860234.0 / 3570523412979.0;
  e[7][2] = 5952760925747.0 / 18750164281544.0;
  e[7][3] = -4412967128996.0 / 6196664114337.0;
  e[7][4] = 4151782504231.0 / 36106512998704.0;
  e[7][5] = 572599549169.0 / 6265429158920.0;
  e[7][6] = -457874356192.0 / 11306498036315.0;
  auto& a = t.a_implicit = zeros(8);
  a[1][0] = g;
  a[2][0] = a[2][1] = 2366667076620.0 / 8822750406821.0;
  a[3][0] = a[3][1] = -257962897183.0 / 4451812247028.0;
  a[3][2] = 128530224461.0 / 14379561246022.0;
  a[4][0] = a[4][1] = -486229321650.0 / 11227943450093.0;
  a[4][2] = -225633144460.0 / 6633558740617.0;
  a[4][3] = 1741320951451.0 / 6824444397158.0;
  a[5][0] = a[5][1] = 621307788657.0 / 4714163060173.0;
  a[5][2] = -125196015625.0 / 3866852212004.0;
  a[5][3] = 940440206406.0 / 7593089888465.0;
  a[5][4] = 961109811699.0 / 6734810228204.0;
  a[6][0] = a[6][1] = 2036305566805.0 / 6583108094622.0;
  a[6][2] = -3039402635899.0 / 4450598839912.0;
  a[6][3] = -1829510709469.0 / 31102090912115.0;
  a[6][4] = -286320471013.0 / 6931253422520.0;
  a[6][5] = 8651533662697.0 / 9642993110008.0;
  for (int j = 0; j < 7; ++j) a[7][j] = t.b[j];
  for (int i = 1; i < 8; ++i) a[i][i] = g;
  return t;
}

ArkTableau rk4_tableau() {
  ArkTableau t;
  t.name = "rk4";
  t.stages = 4;
  t.order = 4;
  t.a_explicit = zeros(4);
  t.a_implicit = zeros(4);
  t.a_explicit[1][0] = 0.5;
  t.a_explicit[2][1] = 0.5;
  t.a_explicit[3][2] = 1.0;
  t.b = {1.0 / 6.0, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 6.0};
  t.c = {0.0, 0.5, 0.5, 1.0};
  return t;
}

ArkTableau tableau_by_name(const std::string& name) {
  if (name == "ark4") return ark4_tableau();
  if (name == "ark5") return ark5_tableau();
  if (name == "ark437") return ark437_tableau();
  if (name == "ark5-2003") return ark5_2003_tableau();
  if (name == "rk4") return rk4_tableau();
  std::ifstream probe(name);
  if (probe) return load_tableau(name);
  throw ContractViolation("unknown tableau '" + name + "' (expected ark4, ark5, ark437, ark5-2003, rk4 or a file)");
}

ArkTableau parse_tableau(const std::string& text) {
  std::istringstream lines(text);
  std::string cleaned;
  for (std::string line; std::getline(lines, line);) {
    cleaned += line.substr(0, line.find('#'));
    cleaned += '\n';
  }
  std::istringstream in(cleaned);
  ArkTableau t;
  if (!(in >> t.name >> t.stages >> t.order) || t.stages < 1 || t.order < 1) {
    throw ContractViolation("tableau file: bad header (expected: name s p)");
  }
  auto read = [&](double& x, const char* what) {
    std::string tok;
    if (!(in >> tok)) throw ContractViolation(std::string("tableau file: missing ") + what);
    // accept p/q rationals as well as decimals
    const auto slash = tok.find('/');
    try {
      x = slash == std::string::npos
              ? std::stod(tok)
              : std::stod(tok.substr(0, slash)) / std::stod(tok.substr(slash + 1));
    } catch (const std::exception&) {
      throw ContractViolation("tableau file: bad number '" + tok + "'");
    }
  };
  const int s = t.stages;
  t.a_explicit = zeros(s);
  t.a_implicit = zeros(s);
  t.b.assign(s, 0.0);
  t.c.assign(s, 0.0);
  for (auto& row : t.a_explicit) for (auto& x : row) read(x, "explicit matrix");
  for (auto& row : t.a_implicit) for (auto& x : row) read(x, "implicit matrix");
  for (auto& x : t.b) read(x, "b");
  for (auto& x : t.c) read(x, "c");
  std::string extra;
  if (in >> extra) throw ContractViolation("tableau file: trailing data '" + extra + "'");
  check_shape(t);
  return t;
}

ArkTableau load_tableau(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ContractViolation("cannot open tableau file " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_tableau(buf.str());
}

std::complex<double> stability_function(const std::vector<std::vector<double>>& a,
                                        const std::vector<double>& b,
                                        std::complex<double> z) {
  const std::size_t s = b.size();
  std::vector<std::complex<double>> y(s);
  for (std::size_t i = 0; i < s; ++i) {
    std::complex<double> acc = 1.0;
    for (std::size_t j = 0; j < i; ++j) acc += z * a[i][j] * y[j];
    y[i] = acc / (1.0 - z * a[i][i]);
  }
  std::complex<double> r = 1.0;
  for (std::size_t i = 0; i < s; ++i) r += z * b[i] * y[i];
  return r;
}

}  // namespace fgr
