#include "foliaquant/model_file.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <set>
#include <sstream>

#include "foliaquant/parser.hpp"

namespace fq {

namespace {

[[noreturn]] void fail_at(const YAML::Node& node, const std::string& message) {
  const auto mark = node.Mark();
  if (mark.is_null()) throw ParseError(message, 1, 1);
  throw ParseError(message, static_cast<std::size_t>(mark.line) + 1, static_cast<std::size_t>(mark.column) + 1);
}

std::string scalar_text(const YAML::Node& node, const std::string& what) {
  if (!node.IsScalar()) fail_at(node, what + " must be a scalar");
  return node.Scalar();
}

std::vector<std::string> name_list(const YAML::Node& node, const std::string& what) {
  std::vector<std::string> out;
  if (!node) return out;
  if (!node.IsSequence()) fail_at(node, what + " must be a list");
  for (const auto& item : node) {
    std::string name = scalar_text(item, what + " entry");
    if (!is_identifier(name)) fail_at(item, "invalid name '" + name + "' in " + what);
    out.push_back(name);
  }
  return out;
}

class Reader {
 public:
  explicit Reader(const YAML::Node& root) : root_(root) {}

  ModelSpec read() {
    if (!root_.IsMap()) fail_at(root_, "model file must be a mapping");
    static const std::set<std::string> known{"name", "chart", "parameters", "epsilon", "omega", "bivector",
                                             "connection", "polarization", "observables", "leaves", "options"};
    for (const auto& kv : root_) {
      std::string key = kv.first.as<std::string>();
      if (!known.contains(key)) fail_at(kv.first, "unknown key '" + key + "'");
    }
    ModelSpec spec;
    spec.name = root_["name"] ? scalar_text(root_["name"], "name") : "model";
    read_chart(spec);
    read_options(spec);
    if (root_["epsilon"]) spec.epsilon = real(root_["epsilon"]);
    if (auto eps = spec.epsilon.as_rational(); eps && *eps <= 0) fail_at(root_["epsilon"], "epsilon must be positive");
    read_structure(spec);
    read_connection(spec);
    read_polarization(spec);
    read_observables(spec);
    read_leaves(spec);
    return spec;
  }

 private:
  void read_chart(ModelSpec& spec) {
    YAML::Node chart = root_["chart"];
    if (!chart || !chart.IsMap()) fail_at(chart ? chart : root_, "missing 'chart' with 'transverse' and 'leaf'");
    auto transverse = name_list(chart["transverse"], "chart.transverse");
    auto leaf = name_list(chart["leaf"], "chart.leaf");
    if (leaf.empty()) fail_at(chart, "chart.leaf must not be empty");
    try {
      spec.chart = make_chart(transverse, leaf);
    } catch (const DomainError& e) {
      fail_at(chart, e.what());
    }
    spec.parameters = name_list(root_["parameters"], "parameters");
    std::set<std::string> symbols(transverse.begin(), transverse.end());
    symbols.insert(leaf.begin(), leaf.end());
    for (const auto& p : spec.parameters) {
      if (!symbols.insert(p).second) fail_at(root_["parameters"], "parameter '" + p + "' clashes with a coordinate");
      if (p == "i" || p == "pi") fail_at(root_["parameters"], "reserved parameter name '" + p + "'");
    }
    parser_.emplace(symbols);
    chart_ = spec.chart;
  }

  void read_options(ModelSpec& spec) {
    YAML::Node o = root_["options"];
    if (!o) return;
    if (!o.IsMap()) fail_at(o, "options must be a mapping");
    for (const auto& kv : o) {
      std::string key = kv.first.as<std::string>();
      try {
        if (key == "samples") {
          spec.options.samples = kv.second.as<unsigned>();
        } else if (key == "max_degree") {
          spec.options.max_degree = kv.second.as<unsigned>();
        } else if (key == "seed") {
          spec.options.seed = kv.second.as<std::uint64_t>();
        } else {
          fail_at(kv.first, "unknown option '" + key + "'");
        }
      } catch (const YAML::BadConversion&) {
        fail_at(kv.second, "option '" + key + "' must be a non-negative integer");
      }
    }
  }

  Complex complex(const YAML::Node& node) {
    std::string text = scalar_text(node, "expression");
    try {
      return parser_->parse_complex(text);
    } catch (const ParseError& e) {
      const auto mark = node.Mark();
      // Quoted scalars start one column before their text.
      std::size_t col = static_cast<std::size_t>(mark.column) + e.column() +
                        (node.Tag() == "!" ? 1 : 0);
      throw ParseError(e.message(), static_cast<std::size_t>(mark.line) + 1, col);
    }
  }

  Expr real(const YAML::Node& node) {
    Complex c = complex(node);
    if (!c.is_real()) fail_at(node, "expected a real expression");
    return c.re;
  }

  std::size_t coordinate(const YAML::Node& node) {
    std::string name = scalar_text(node, "coordinate");
    auto g = chart_->index_of(name);
    if (!g) fail_at(node, "unknown coordinate '" + name + "'");
    return *g;
  }

  std::size_t leaf_coordinate(const YAML::Node& node) {
    std::size_t g = coordinate(node);
    if (!chart_->is_leaf_index(g)) fail_at(node, "'" + node.Scalar() + "' is not a leaf coordinate");
    return g - chart_->codim();
  }

  // Entries of the form [[a, b], "expr"].
  template <class F>
  Graded<F> table(const YAML::Node& node, std::size_t degree, bool leaf_indices) {
    if (!node.IsSequence()) fail_at(node, "expected a list of [[indices], expression] pairs");
    Graded<F> g(chart_, degree);
    for (const auto& entry : node) {
      if (!entry.IsSequence() || entry.size() != 2 || !entry[0].IsSequence()) {
        fail_at(entry, "expected [[indices], expression]");
      }
      if (entry[0].size() != degree) fail_at(entry[0], "expected " + std::to_string(degree) + " indices");
      IndexTuple idx;
      for (const auto& i : entry[0]) idx.push_back(leaf_indices ? leaf_coordinate(i) : coordinate(i));
      IndexTuple sorted = idx;
      if (sort_with_sign(sorted) == 0) fail_at(entry[0], "repeated index");
      g.add(idx, real(entry[1]));
    }
    return g;
  }

  void read_structure(ModelSpec& spec) {
    YAML::Node omega = root_["omega"];
    YAML::Node bivector = root_["bivector"];
    if (omega && bivector) fail_at(bivector, "give either 'omega' or 'bivector', not both");
    if (!omega && !bivector) fail_at(root_, "missing 'omega' or 'bivector'");
    if (omega) spec.omega = table<Leafwise>(omega, 2, true);
    if (bivector) spec.bivector = table<Multivector>(bivector, 2, false);
  }

  // Mapping coordinate -> expression into a vector over leaf or transverse ordinals.
  std::vector<Complex> potentials(const YAML::Node& node, bool leaf) {
    std::vector<Complex> out(leaf ? chart_->leaf_dim() : chart_->codim());
    if (!node) return out;
    if (!node.IsMap()) fail_at(node, "potentials must map coordinates to expressions");
    for (const auto& kv : node) {
      std::size_t g = coordinate(kv.first);
      if (chart_->is_leaf_index(g) != leaf) {
        fail_at(kv.first, std::string("expected a ") + (leaf ? "leaf" : "transverse") + " coordinate");
      }
      out[leaf ? g - chart_->codim() : g] = complex(kv.second);
    }
    return out;
  }

  void read_connection(ModelSpec& spec) {
    YAML::Node c = root_["connection"];
    if (!c) return;
    if (!c.IsMap()) fail_at(c, "connection must be a mapping");
    for (const auto& kv : c) {
      std::string key = kv.first.as<std::string>();
      if (key != "leafwise" && key != "transverse" && key != "leaf" && key != "splitting" && key != "hermitian_gauge") {
        fail_at(kv.first, "unknown connection key '" + key + "'");
      }
    }
    if (c["leafwise"] && (c["leaf"] || c["transverse"])) {
      fail_at(c, "give either 'leafwise' potentials or full 'transverse'/'leaf' potentials");
    }
    if (c["leafwise"]) {
      spec.leafwise_connection = LeafwiseConnection{chart_, potentials(c["leafwise"], true)};
    } else {
      spec.connection = Connection{chart_, potentials(c["transverse"], false), potentials(c["leaf"], true)};
    }
    if (c["splitting"]) {
      YAML::Node s = c["splitting"];
      if (!s.IsMap()) fail_at(s, "splitting must map leaf coordinates to transverse maps");
      std::vector<std::vector<Expr>> b(chart_->leaf_dim(), std::vector<Expr>(chart_->codim()));
      for (const auto& row : s) {
        std::size_t i = leaf_coordinate(row.first);
        if (!row.second.IsMap()) fail_at(row.second, "splitting row must map transverse coordinates to expressions");
        for (const auto& kv : row.second) {
          std::size_t l = coordinate(kv.first);
          if (chart_->is_leaf_index(l)) fail_at(kv.first, "splitting columns are transverse coordinates");
          b[i][l] = real(kv.second);
        }
      }
      spec.splitting = Splitting(chart_, std::move(b));
    }
    if (c["hermitian_gauge"]) {
      try {
        spec.hermitian_gauge = c["hermitian_gauge"].as<bool>();
      } catch (const YAML::BadConversion&) {
        fail_at(c["hermitian_gauge"], "hermitian_gauge must be true or false");
      }
    }
  }

  void read_polarization(ModelSpec& spec) {
    YAML::Node p = root_["polarization"];
    if (!p) return;
    if (!p.IsMap()) fail_at(p, "polarization must be a mapping");
    YAML::Node gens = p["generators"];
    if (!gens || !gens.IsSequence()) fail_at(p, "polarization.generators must be a list");
    for (const auto& g : gens) {
      if (!g.IsMap()) fail_at(g, "a generator maps coordinates to component expressions");
      std::vector<Expr> comps(chart_->dim());
      for (const auto& kv : g) comps[coordinate(kv.first)] = real(kv.second);
      spec.polarization.generators.push_back(vector_field(chart_, comps));
    }
    if (YAML::Node h = p["hamiltonians_of"]) {
      if (!h.IsSequence()) fail_at(h, "hamiltonians_of must be a list");
      for (const auto& f : h) spec.polarization.hamiltonians_of.push_back(real(f));
    }
  }

  void read_observables(ModelSpec& spec) {
    YAML::Node o = root_["observables"];
    if (!o) return;
    if (!o.IsMap()) fail_at(o, "observables must map names to expressions");
    std::set<std::string> seen;
    for (const auto& kv : o) {
      std::string name = scalar_text(kv.first, "observable name");
      if (!is_identifier(name)) fail_at(kv.first, "observable names must be identifiers");
      if (!seen.insert(name).second) fail_at(kv.first, "duplicate observable '" + name + "'");
      spec.observables.emplace_back(name, real(kv.second));
    }
  }

  void read_leaves(ModelSpec& spec) {
    YAML::Node l = root_["leaves"];
    if (!l) return;
    if (!l.IsSequence()) fail_at(l, "leaves must be a list of transverse assignments");
    for (const auto& entry : l) {
      if (!entry.IsMap()) fail_at(entry, "a leaf assigns every transverse coordinate");
      Bindings values;
      for (const auto& kv : entry) {
        std::size_t g = coordinate(kv.first);
        if (chart_->is_leaf_index(g)) fail_at(kv.first, "leaves fix transverse coordinates only");
        values[kv.first.Scalar()] = real(kv.second);
      }
      try {
        spec.leaves.emplace_back(chart_, std::move(values));
      } catch (const DomainError& e) {
        fail_at(entry, e.what());
      }
    }
  }

  const YAML::Node& root_;
  ChartPtr chart_;
  std::optional<ExpressionParser> parser_;
};

}  // namespace

LeafwiseConnection ModelSpec::leafwise() const {
  if (leafwise_connection) return *leafwise_connection;
  if (connection) return restrict_connection(*connection);
  return LeafwiseConnection::zero(chart);
}

Splitting ModelSpec::splitting_or_default() const { return splitting ? *splitting : Splitting(chart); }

ModelSpec parse_model(const std::string& text) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::ParserException& e) {
    throw ParseError(e.msg, static_cast<std::size_t>(e.mark.line) + 1, static_cast<std::size_t>(e.mark.column) + 1);
  }
  try {
    return Reader(root).read();
  } catch (const YAML::Exception& e) {
    throw ParseError(e.msg, static_cast<std::size_t>(e.mark.line) + 1, static_cast<std::size_t>(e.mark.column) + 1);
  }
}

ModelSpec load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read model file '" + path + "'", 1, 1);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_model(buffer.str());
}

QuantumModel build_quantum_model(const ModelSpec& spec) {
  ZeroTestOptions zt;
  zt.samples = spec.options.samples;
  zt.seed = spec.options.seed;
  std::optional<LeafwiseSymplectic> omega;
  MultivectorField w(spec.chart, 2);
  if (spec.omega) {
    omega.emplace(*spec.omega, zt);
    w = bivector_from_omega(*omega);
  } else {
    omega.emplace(omega_from_bivector(*spec.bivector, zt));
    w = *spec.bivector;
  }
  return QuantumModel{spec.name,   spec.chart,         spec.parameters, spec.epsilon, std::move(*omega), std::move(w),
                      spec.leafwise(), spec.polarization, spec.observables, zt};
}

}  // namespace fq
