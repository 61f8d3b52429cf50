#include "jetnash/problem.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "jetnash/parse.hpp"

namespace jetnash {

namespace {

using nlohmann::json;

template <typename T>
T field(const json& doc, const char* key, const char* what) {
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception&) {
    throw InputError(std::string("field '") + key + "' must be " + what);
  }
}

unsigned long long binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  unsigned long long r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > (1ull << 50)) return r;
  }
  return r;
}

}  // namespace

ProblemSpec problemSpecFromJson(const json& doc) {
  if (!doc.is_object()) throw InputError("problem document must be a JSON object");
  ProblemSpec spec;
  if (doc.contains("name")) spec.name = field<std::string>(doc, "name", "a string");
  spec.variables = field<std::vector<std::string>>(doc, "variables", "an array of names");
  if (doc.contains("relations"))
    spec.relations = field<std::vector<std::string>>(doc, "relations", "an array of polynomials");
  spec.matrix = field<std::vector<std::vector<std::string>>>(doc, "matrix",
                                                             "an array of rows of polynomials");
  if (!doc.contains("rank") || !doc.at("rank").is_number_unsigned() || doc.at("rank").get<std::size_t>() == 0)
    throw InputError("field 'rank' must be a positive integer");
  spec.rank = doc.at("rank").get<std::size_t>();
  if (doc.contains("jetOrders"))
    spec.jetOrders = field<std::vector<unsigned>>(doc, "jetOrders", "an array of non-negative integers");
  if (doc.contains("expected")) {
    const auto& exp = doc.at("expected");
    if (!exp.is_object()) throw InputError("field 'expected' must be an object keyed by jet order");
    for (const auto& [key, value] : exp.items()) {
      if (key.empty() || key.size() > 3 || !std::all_of(key.begin(), key.end(), ::isdigit))
        throw InputError("expected: key '" + key + "' is not a jet order");
      if (!value.is_string()) throw InputError("expected[" + key + "] must be a string");
      spec.expected[static_cast<unsigned>(std::stoul(key))] = value.get<std::string>();
    }
  }
  if (doc.contains("witness")) spec.witness = field<std::string>(doc, "witness", "a polynomial");
  if (doc.contains("limits")) {
    const auto& l = doc.at("limits");
    if (!l.is_object()) throw InputError("field 'limits' must be an object");
    if (l.contains("maxJetOrder")) spec.limits.maxJetOrder = field<unsigned>(l, "maxJetOrder", "an integer");
    if (l.contains("maxMinorSize")) spec.limits.maxMinorSize = field<std::size_t>(l, "maxMinorSize", "an integer");
    if (l.contains("maxPairs")) spec.limits.maxPairs = field<std::size_t>(l, "maxPairs", "an integer");
    if (l.contains("maxMinorCount")) spec.limits.maxMinorCount = field<std::size_t>(l, "maxMinorCount", "an integer");
    if (l.contains("maxInputDegree")) spec.limits.maxInputDegree = field<std::uint64_t>(l, "maxInputDegree", "an integer");
  }
  return spec;
}

ProblemSpec parseProblemSpec(std::string_view jsonText) {
  json doc;
  try {
    doc = json::parse(jsonText);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  return problemSpecFromJson(doc);
}

bool ResultDocument::hasVerification() const {
  return std::any_of(orders.begin(), orders.end(), [](const auto& o) { return o.verification.has_value(); });
}

bool ResultDocument::allVerified() const {
  return std::all_of(orders.begin(), orders.end(),
                     [](const auto& o) { return !o.verification || o.verification->equal; });
}

namespace {

class Pipeline {
 public:
  Pipeline(const ProblemSpec& spec, const RunOptions& options) : spec_(spec), options_(options) {
    try {
      ring_ = PolynomialRing::create(spec.variables);
    } catch (const DomainError& e) {
      throw InputError(std::string("variables: ") + e.what());
    }
    if (spec.matrix.empty() || spec.matrix.front().empty()) throw InputError("empty matrix");
    for (std::size_t i = 0; i < spec.relations.size(); ++i)
      relations_.push_back(parse(spec.relations[i], "relations[" + std::to_string(i) + "]"));
    std::vector<std::vector<Polynomial>> rows;
    for (std::size_t r = 0; r < spec.matrix.size(); ++r) {
      if (spec.matrix[r].size() != spec.matrix.front().size())
        throw InputError("matrix is not rectangular: row " + std::to_string(r) + " has " +
                         std::to_string(spec.matrix[r].size()) + " entries");
      std::vector<Polynomial> row;
      for (std::size_t c = 0; c < spec.matrix[r].size(); ++c)
        row.push_back(parse(spec.matrix[r][c],
                            "matrix[" + std::to_string(r) + "][" + std::to_string(c) + "]"));
      rows.push_back(std::move(row));
    }
    if (spec.witness) witness_ = parse(*spec.witness, "witness");
    try {
      presentation_.emplace(PolyMatrix::fromRows(ring_, std::move(rows)), spec.rank, relations_);
    } catch (const DomainError& e) {
      throw InputError(e.what());
    }

    nashOptions_.maxJetOrder = spec.limits.maxJetOrder;
    nashOptions_.minors.interreduce = options.interreduce;
    nashOptions_.minors.threads = options.threads;
    nashOptions_.minors.maxMinorSize = spec.limits.maxMinorSize;
    nashOptions_.minors.groebner.maxPairs = spec.limits.maxPairs;
  }

  const ModulePresentation& presentation() const { return *presentation_; }
  const RingPtr& ring() const { return ring_; }

  const NashJetResult& result(unsigned n) {
    if (auto it = cache_.find(n); it != cache_.end()) return it->second;
    checkLimits(n);
    return cache_.emplace(n, nashIdeal(*presentation_, static_cast<int>(n), nashOptions_)).first->second;
  }

  OrderResult run(unsigned n) {
    const auto start = std::chrono::steady_clock::now();
    const NashJetResult& res = result(n);
    OrderResult out;
    out.jetOrder = n;
    out.blockRows = presentation_->matrix().rows();
    out.blockCols = presentation_->matrix().cols();
    for (std::size_t r = 0; r < res.jetMatrix.rows(); ++r) {
      std::vector<std::string> row;
      for (std::size_t c = 0; c < res.jetMatrix.cols(); ++c) row.push_back(res.jetMatrix.at(r, c).toString());
      out.jetMatrix.push_back(std::move(row));
    }
    out.generators = canonical(res.ideal.generators());
    out.jetRelations = canonical(res.jetRelations.generators());
    if (witness_ && presentation_->isQuotient()) {
      Ideal main = mainComponentIdeal(res.jetRelations, *witness_, res.context);
      out.mainComponent = canonical(main.groebnerBasis());
    }
    if (auto it = spec_.expected.find(n); it != spec_.expected.end()) out.verification = verify(n, it->second);
    out.elapsedMs =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return out;
  }

 private:
  Polynomial parse(const std::string& text, const std::string& where) {
    try {
      Polynomial p = parsePolynomial(text, ring_);
      if (p.totalDegree() > spec_.limits.maxInputDegree)
        throw ResourceLimitError(where + ": degree " + std::to_string(p.totalDegree()) +
                                 " exceeds the cap of " + std::to_string(spec_.limits.maxInputDegree));
      return p;
    } catch (const ParseError& e) {
      throw InputError(where + ": " + e.what());
    }
  }

  void checkLimits(unsigned n) const {
    if (n > spec_.limits.maxJetOrder)
      throw ResourceLimitError("jet order " + std::to_string(n) + " exceeds the cap of " +
                               std::to_string(spec_.limits.maxJetOrder));
    const auto& m = presentation_->matrix();
    const std::size_t k = (n + 1) * presentation_->rank();
    if (k > spec_.limits.maxMinorSize)
      throw ResourceLimitError("minor size " + std::to_string(k) + " exceeds the cap of " +
                               std::to_string(spec_.limits.maxMinorSize));
    const auto count = binomial((n + 1) * m.rows(), k) * binomial((n + 1) * m.cols(), k);
    if (count > spec_.limits.maxMinorCount)
      throw ResourceLimitError("jet order " + std::to_string(n) + " needs " + std::to_string(count) +
                               " minors, above the cap of " + std::to_string(spec_.limits.maxMinorCount));
  }

  static std::vector<std::string> canonical(std::vector<Polynomial> polys) {
    std::sort(polys.begin(), polys.end(), [](const Polynomial& a, const Polynomial& b) {
      auto c = a.ring()->order().compare(a.leadingMonomial(), b.leadingMonomial());
      if (c != 0) return c > 0;
      return a.toString() < b.toString();
    });
    std::vector<std::string> out;
    for (const auto& p : polys) out.push_back(p.toString());
    return out;
  }

  OrderVerification verify(unsigned n, const std::string& expression) {
    const NashJetResult& res = result(n);
    IdealExpr expr = [&] {
      try {
        return IdealExpr::parse(expression, res.context.jetRing());
      } catch (const ParseError& e) {
        throw InputError("expected[" + std::to_string(n) + "]: " + e.what());
      }
    }();
    std::map<std::string, Ideal> atoms;
    for (const auto& name : expr.atoms()) {
      unsigned k = 0;
      if (name.size() < 3 || name.rfind("a_", 0) != 0 || name.size() > 5 ||
          !std::all_of(name.begin() + 2, name.end(), ::isdigit) || (k = std::stoul(name.substr(2))) > n)
        throw InputError("expected[" + std::to_string(n) + "]: undefined atom '" + name +
                         "' (atoms are a_0 ... a_" + std::to_string(n) + ")");
      atoms.emplace(name, result(k).ideal);
    }
    const Ideal& computed = result(n).ideal;
    VerificationReport report = verifyPresentation(computed, expr, atoms);
    return {expression, report.equal, report.describe()};
  }

  const ProblemSpec& spec_;
  const RunOptions& options_;
  RingPtr ring_;
  std::vector<Polynomial> relations_;
  std::optional<Polynomial> witness_;
  std::optional<ModulePresentation> presentation_;
  NashOptions nashOptions_;
  std::map<unsigned, NashJetResult> cache_;
};

}  // namespace

ResultDocument runCompute(const ProblemSpec& spec, const RunOptions& options) {
  Pipeline pipeline(spec, options);
  std::set<unsigned> orders;
  if (options.jetOrder) {
    orders.insert(*options.jetOrder);
  } else {
    orders.insert(spec.jetOrders.begin(), spec.jetOrders.end());
    for (const auto& [n, _] : spec.expected) orders.insert(n);
    if (orders.empty()) orders.insert(0);
  }

  ResultDocument doc;
  doc.name = spec.name;
  doc.variables = spec.variables;
  doc.rank = spec.rank;
  for (const auto& r : pipeline.presentation().relations()) doc.relations.push_back(r.toString());
  doc.warnings = pipeline.presentation().warnings();
  for (unsigned n : orders) doc.orders.push_back(pipeline.run(n));
  return doc;
}

nlohmann::ordered_json toJson(const ResultDocument& doc, bool includeTimings) {
  nlohmann::ordered_json out;
  out["name"] = doc.name;
  out["variables"] = doc.variables;
  out["relations"] = doc.relations;
  out["rank"] = doc.rank;
  out["warnings"] = doc.warnings;
  auto results = nlohmann::ordered_json::array();
  for (const auto& o : doc.orders) {
    nlohmann::ordered_json r;
    r["jetOrder"] = o.jetOrder;
    r["shape"] = {o.jetMatrix.size(), o.jetMatrix.empty() ? 0 : o.jetMatrix.front().size()};
    r["jetMatrix"] = o.jetMatrix;
    r["generators"] = o.generators;
    r["jetRelations"] = o.jetRelations;
    if (o.mainComponent) r["mainComponent"] = *o.mainComponent;
    if (o.verification) {
      r["verification"] = {{"expression", o.verification->expression},
                           {"equal", o.verification->equal},
                           {"report", o.verification->report}};
    }
    if (includeTimings) r["elapsedMs"] = o.elapsedMs;
    results.push_back(std::move(r));
  }
  out["results"] = std::move(results);
  if (doc.hasVerification()) out["verified"] = doc.allVerified();
  return out;
}

std::string renderBlockMatrix(const std::vector<std::vector<std::string>>& entries,
                              std::size_t blockRows, std::size_t blockCols) {
  if (entries.empty()) return "";
  const std::size_t cols = entries.front().size();
  std::vector<std::size_t> width(cols, 1);
  for (const auto& row : entries)
    for (std::size_t c = 0; c < cols; ++c) width[c] = std::max(width[c], row[c].size());

  auto separatorLine = [&] {
    std::string s = "  ";
    for (std::size_t c = 0; c < cols; ++c) {
      if (c > 0 && blockCols && c % blockCols == 0) s += "-+-";
      else if (c > 0) s += "--";
      s += std::string(width[c], '-');
    }
    return s + "\n";
  };

  std::ostringstream os;
  for (std::size_t r = 0; r < entries.size(); ++r) {
    if (r > 0 && blockRows && r % blockRows == 0) os << separatorLine();
    std::string line = "  ";
    for (std::size_t c = 0; c < cols; ++c) {
      if (c > 0 && blockCols && c % blockCols == 0) line += " | ";
      else if (c > 0) line += "  ";
      line += entries[r][c] + std::string(width[c] - entries[r][c].size(), ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << "\n";
  }
  return os.str();
}

std::string renderText(const ResultDocument& doc, bool includeTimings) {
  std::ostringstream os;
  if (!doc.name.empty()) os << "problem: " << doc.name << "\n";
  os << "ring: Q[";
  for (std::size_t i = 0; i < doc.variables.size(); ++i) os << (i ? ", " : "") << doc.variables[i];
  os << "]";
  if (!doc.relations.empty()) {
    os << "/(";
    for (std::size_t i = 0; i < doc.relations.size(); ++i) os << (i ? ", " : "") << doc.relations[i];
    os << ")";
  }
  os << "  rank: " << doc.rank << "\n";
  for (const auto& w : doc.warnings) os << "warning: " << w << "\n";

  auto list = [&](const std::vector<std::string>& items) {
    if (items.empty()) return std::string("(0)\n");
    std::string s = "(\n";
    for (std::size_t i = 0; i < items.size(); ++i) s += "  " + items[i] + (i + 1 < items.size() ? ",\n" : "\n");
    return s + ")\n";
  };

  for (const auto& o : doc.orders) {
    const std::size_t rows = o.jetMatrix.size();
    const std::size_t cols = rows ? o.jetMatrix.front().size() : 0;
    os << "\n== jet order " << o.jetOrder << " ==\n";
    os << "M_" << o.jetOrder << " (" << rows << "x" << cols << "):\n";
    os << renderBlockMatrix(o.jetMatrix, o.blockRows, o.blockCols);
    os << "a_" << o.jetOrder << " (" << o.generators.size() << " generators) = " << list(o.generators);
    if (!o.jetRelations.empty()) os << "jet relations = " << list(o.jetRelations);
    if (o.mainComponent) os << "main component = " << list(*o.mainComponent);
    if (o.verification) {
      os << "expected: " << o.verification->expression << "\n";
      os << "verification: " << (o.verification->equal ? "PASS" : "FAIL (" + o.verification->report + ")")
         << "\n";
    }
    if (includeTimings) os << "time: " << o.elapsedMs << " ms\n";
  }
  if (doc.hasVerification()) os << "\n" << (doc.allVerified() ? "VERIFIED" : "NOT VERIFIED") << "\n";
  return os.str();
}

}  // namespace jetnash
