#include "weakcp/io.hpp"

#include <cctype>
#include <istream>
#include <sstream>

namespace weakcp {

// ---------------------------------------------------------- ProductBlock

ProductBlock::ProductBlock(CocycleVariant k, Space c, const Field& f,
                           const Space& hopf_space)
    : kind(k), carrier(std::move(c)), unit(carrier, f),
      delta(carrier, tensor_space(carrier, hopf_space), f) {}

bool ProductBlock::operator==(const ProductBlock& o) const {
  return kind == o.kind && same_space(carrier, o.carrier) && mult == o.mult &&
         unit == o.unit && delta == o.delta;
}

ProductBlock product_block_of(const CrossedProduct& p, const Space& hopf_space) {
  ProductBlock b(p.provenance, p.carrier, p.field, hopf_space);
  b.mult = p.mult;
  b.unit = p.unit;
  b.delta = p.delta;
  return b;
}

// -------------------------------------------------------------- Instance

bool Instance::operator==(const Instance& o) const {
  return field == o.field && hopf == o.hopf && antipode == o.antipode &&
         antipode_inv == o.antipode_inv && algebra == o.algebra &&
         action == o.action && cocycle_variant == o.cocycle_variant &&
         cocycle == o.cocycle && product == o.product;
}

WeakHopfAlgebra Instance::assemble_hopf() const {
  if (!hopf || !antipode) throw error("instance has no complete hopf block");
  return make_weak_hopf(*hopf, *antipode, antipode_inv);
}

Measuring Instance::assemble_measuring() const {
  if (!algebra) throw error("instance has no algebra block");
  if (!action) throw error("instance has no action block");
  return Measuring(assemble_hopf(), *algebra, *action);
}

CocycleTable Instance::assemble_cocycle() const {
  if (!cocycle) throw error("instance has no cocycle block");
  return CocycleTable(assemble_measuring(), *cocycle, *cocycle_variant);
}

// --------------------------------------------------------------- parsing

namespace {

struct Line {
  std::size_t no;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  std::size_t no = 0;
  while (std::getline(in, raw)) {
    ++no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line l{no, {}};
    std::string tok;
    while (ls >> tok) l.tokens.push_back(tok);
    if (!l.tokens.empty()) out.push_back(std::move(l));
  }
  return out;
}

class Parser {
public:
  explicit Parser(std::vector<Line> lines) : lines_(std::move(lines)) {}

  Instance run() {
    Instance inst;
    expect_header();
    inst.field = parse_field();
    while (!done()) {
      const Line& l = peek();
      if (l.tokens[0] != "begin")
        fail(l.no, "expected a 'begin <block>' line, got '" + l.tokens[0] + "'");
      const std::string& block = token(l, 1);
      if (block == "hopf") {
        next();
        parse_hopf(inst);
      } else if (block == "algebra") {
        next();
        inst.algebra = parse_algebra(inst.field);
      } else if (block == "action") {
        next();
        parse_action(inst);
      } else if (block == "cocycle") {
        parse_cocycle(inst);
      } else if (block == "product") {
        parse_product(inst);
      } else {
        fail(l.no, "unknown block '" + block + "'");
      }
    }
    if (!inst.hopf) fail(last_line(), "missing hopf block");
    if (!inst.algebra) fail(last_line(), "missing algebra block");
    return inst;
  }

private:
  [[noreturn]] void fail(std::size_t line, const std::string& msg) {
    throw parse_error(line, msg);
  }

  bool done() const { return pos_ >= lines_.size(); }
  const Line& peek() {
    if (done()) fail(last_line(), "unexpected end of file");
    return lines_[pos_];
  }
  const Line& next() {
    const Line& l = peek();
    ++pos_;
    return l;
  }
  std::size_t last_line() const { return lines_.empty() ? 0 : lines_.back().no; }

  const std::string& token(const Line& l, std::size_t i) {
    if (i >= l.tokens.size()) fail(l.no, "missing token");
    return l.tokens[i];
  }

  std::size_t parse_index(const Line& l, const std::string& tok, std::size_t bound,
                          const std::string& what) {
    if (tok.empty()) fail(l.no, "malformed " + what + " index ''");
    for (char ch : tok)
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        fail(l.no, "malformed " + what + " index '" + tok + "'");
    unsigned long long v = 0;
    try {
      v = std::stoull(tok);
    } catch (const std::exception&) {
      fail(l.no, "malformed " + what + " index '" + tok + "'");
    }
    if (v >= bound)
      fail(l.no, what + " index " + tok + " out of range (bound " +
                     std::to_string(bound) + ")");
    return static_cast<std::size_t>(v);
  }

  void expect_header() {
    const Line& l = next();
    if (l.tokens.size() != 2 || l.tokens[0] != "weakcp-instance" || l.tokens[1] != "v1")
      fail(l.no, "expected header 'weakcp-instance v1'");
  }

  Field parse_field() {
    const Line& l = next();
    if (l.tokens[0] != "field")
      fail(l.no, "expected 'field rational' or 'field prime <p>'");
    if (l.tokens.size() == 2 && l.tokens[1] == "rational") return Field::rationals();
    if (l.tokens.size() == 3 && l.tokens[1] == "prime") {
      try {
        return Field::prime(std::stoul(l.tokens[2]));
      } catch (const error& e) {
        fail(l.no, e.what());
      } catch (const std::exception&) {
        fail(l.no, "malformed field modulus '" + l.tokens[2] + "'");
      }
    }
    fail(l.no, "expected 'field rational' or 'field prime <p>'");
  }

  Scalar parse_scalar(const Line& l, const Field& f, const std::string& tok) {
    try {
      return Scalar::parse(f, tok);
    } catch (const error& e) {
      fail(l.no, e.what());
    }
  }

  void expect_end(const std::string& block) {
    const Line& l = next();
    if (l.tokens.size() != 2 || l.tokens[0] != "end" || l.tokens[1] != block)
      fail(l.no, "expected 'end " + block + "'");
  }

  bool at_end(const std::string& block) {
    const Line& l = peek();
    return l.tokens.size() == 2 && l.tokens[0] == "end" && l.tokens[1] == block;
  }

  // dim + basis lines shared by hopf / algebra / product blocks.
  Space parse_space_header() {
    const Line& dl = next();
    if (dl.tokens.size() != 2 || dl.tokens[0] != "dim")
      fail(dl.no, "expected 'dim <n>'");
    std::size_t dim = parse_index(dl, dl.tokens[1], 100000, "dimension");
    const Line& bl = next();
    if (bl.tokens.empty() || bl.tokens[0] != "basis")
      fail(bl.no, "expected 'basis <labels...>'");
    if (bl.tokens.size() != dim + 1)
      fail(bl.no, "expected " + std::to_string(dim) + " basis labels, got " +
                      std::to_string(bl.tokens.size() - 1));
    std::vector<std::string> labels(bl.tokens.begin() + 1, bl.tokens.end());
    try {
      return make_space(std::move(labels));
    } catch (const error& e) {
      fail(bl.no, e.what());
    }
  }

  Vec parse_vector_block(const std::string& name, const Space& s, const Field& f) {
    const Line& bl = next();
    if (bl.tokens.size() != 2 || bl.tokens[0] != "begin" || bl.tokens[1] != name)
      fail(bl.no, "expected 'begin " + name + "'");
    Vec v(s, f);
    while (!at_end(name)) {
      const Line& l = next();
      if (l.tokens.size() != 2) fail(l.no, "expected '<index> <value>'");
      std::size_t i = parse_index(l, l.tokens[0], s->dim(), name);
      v.set(i, parse_scalar(l, f, l.tokens[1]));
    }
    expect_end(name);
    return v;
  }

  // Sparse matrix block: rows x cols, triples "<row> <col> <value>".
  std::vector<Scalar> parse_matrix_block(const std::string& name, std::size_t rows,
                                         std::size_t cols, const Field& f) {
    const Line& bl = next();
    if (bl.tokens.size() != 2 || bl.tokens[0] != "begin" || bl.tokens[1] != name)
      fail(bl.no, "expected 'begin " + name + "'");
    std::vector<Scalar> m(rows * cols, Scalar::zero(f));
    while (!at_end(name)) {
      const Line& l = next();
      if (l.tokens.size() != 3) fail(l.no, "expected '<row> <col> <value>'");
      std::size_t r = parse_index(l, l.tokens[0], rows, name + " row");
      std::size_t c = parse_index(l, l.tokens[1], cols, name + " col");
      m[r * cols + c] = parse_scalar(l, f, l.tokens[2]);
    }
    expect_end(name);
    return m;
  }

  // Table <in-index> -> <out vector>, from a rows x dim(out) matrix.
  std::vector<Vec> table_from_matrix(const std::vector<Scalar>& m, std::size_t rows,
                                     const Space& out, const Field& f) {
    std::vector<Vec> t;
    t.reserve(rows);
    std::size_t cols = out->dim();
    for (std::size_t r = 0; r < rows; ++r) {
      Vec v(out, f);
      for (std::size_t c = 0; c < cols; ++c)
        if (!m[r * cols + c].is_zero()) v.set(c, m[r * cols + c]);
      t.push_back(std::move(v));
    }
    return t;
  }

  LinMap map_from_matrix(const std::vector<Scalar>& m, const Space& dom,
                         const Space& cod, const Field& f) {
    // stored as <out-row> <in-col> <value>
    LinMap map(dom, cod, f);
    for (std::size_t r = 0; r < cod->dim(); ++r)
      for (std::size_t c = 0; c < dom->dim(); ++c)
        if (!m[r * dom->dim() + c].is_zero()) map.set(r, c, m[r * dom->dim() + c]);
    return map;
  }

  void parse_hopf(Instance& inst) {
    const Field& f = inst.field;
    Space H = parse_space_header();
    std::size_t n = H->dim();
    Vec unit = parse_vector_block("unit", H, f);
    auto multm = parse_matrix_block("mult", n * n, n, f);
    auto comultm = parse_matrix_block("comult", n, n * n, f);
    Vec counitv = parse_vector_block("counit", H, f);
    auto sm = parse_matrix_block("antipode", n, n, f);
    std::optional<std::vector<Scalar>> sim;
    if (!done() && peek().tokens.size() == 2 && peek().tokens[0] == "begin" &&
        peek().tokens[1] == "antipode-inv")
      sim = parse_matrix_block("antipode-inv", n, n, f);
    std::size_t closing = peek().no;
    expect_end("hopf");

    try {
      StructuredAlgebra alg(H, f, table_from_matrix(multm, n * n, H, f), unit);
      Space HH = tensor_space(H, H);
      std::vector<Vec> comult;
      for (std::size_t i = 0; i < n; ++i) {
        Vec v(HH, f);
        for (std::size_t c = 0; c < n * n; ++c)
          if (!comultm[i * n * n + c].is_zero()) v.set(c, comultm[i * n * n + c]);
        comult.push_back(std::move(v));
      }
      std::vector<Scalar> counit;
      for (std::size_t i = 0; i < n; ++i) counit.push_back(counitv[i]);
      StructuredCoalgebra coalg(H, f, std::move(comult), std::move(counit));
      inst.hopf = WeakBialgebra(std::move(alg), std::move(coalg));
      inst.antipode = map_from_matrix(sm, H, H, f);
      if (sim) inst.antipode_inv = map_from_matrix(*sim, H, H, f);
    } catch (const error& e) {
      fail(closing, std::string("invalid hopf block: ") + e.what());
    }
  }

  StructuredAlgebra parse_algebra(const Field& f) {
    Space A = parse_space_header();
    std::size_t n = A->dim();
    Vec unit = parse_vector_block("unit", A, f);
    auto multm = parse_matrix_block("mult", n * n, n, f);
    std::size_t closing = peek().no;
    expect_end("algebra");
    try {
      return StructuredAlgebra(A, f, table_from_matrix(multm, n * n, A, f), unit);
    } catch (const error& e) {
      fail(closing, std::string("invalid algebra block: ") + e.what());
    }
  }

  void parse_action(Instance& inst) {
    if (!inst.hopf || !inst.algebra)
      fail(peek().no, "action block must follow the hopf and algebra blocks");
    std::size_t nh = inst.hopf->dim(), na = inst.algebra->dim();
    const Field& f = inst.field;
    std::vector<Scalar> m(nh * na * na, Scalar::zero(f));
    while (!at_end("action")) {
      const Line& l = next();
      if (l.tokens.size() != 3) fail(l.no, "expected '<pair-row> <out-col> <value>'");
      std::size_t r = parse_index(l, l.tokens[0], nh * na, "action row");
      std::size_t c = parse_index(l, l.tokens[1], na, "action col");
      m[r * na + c] = parse_scalar(l, f, l.tokens[2]);
    }
    expect_end("action");
    inst.action = table_from_matrix(m, nh * na, inst.algebra->space, f);
  }

  void parse_cocycle(Instance& inst) {
    const Line& head = next();  // begin cocycle <variant>
    if (head.tokens.size() != 3) fail(head.no, "expected 'begin cocycle bb|ag'");
    const std::string& var = head.tokens[2];
    if (var != "bb" && var != "ag") fail(head.no, "cocycle variant must be bb or ag");
    if (!inst.hopf || !inst.algebra)
      fail(head.no, "cocycle block must follow the hopf and algebra blocks");
    std::size_t nh = inst.hopf->dim(), na = inst.algebra->dim();
    const Field& f = inst.field;
    std::vector<Scalar> m(nh * nh * na, Scalar::zero(f));
    while (!at_end("cocycle")) {
      const Line& l = next();
      if (l.tokens.size() != 3) fail(l.no, "expected '<pair-row> <out-col> <value>'");
      std::size_t r = parse_index(l, l.tokens[0], nh * nh, "cocycle row");
      std::size_t c = parse_index(l, l.tokens[1], na, "cocycle col");
      m[r * na + c] = parse_scalar(l, f, l.tokens[2]);
    }
    expect_end("cocycle");
    inst.cocycle = table_from_matrix(m, nh * nh, inst.algebra->space, f);
    inst.cocycle_variant = var == "bb" ? CocycleVariant::BB : CocycleVariant::AG;
  }

  void parse_product(Instance& inst) {
    const Line& head = next();  // begin product <variant>
    if (head.tokens.size() != 3) fail(head.no, "expected 'begin product bb|ag'");
    const std::string& var = head.tokens[2];
    if (var != "bb" && var != "ag") fail(head.no, "product variant must be bb or ag");
    if (!inst.hopf) fail(head.no, "product block must follow the hopf block");
    const Field& f = inst.field;
    Space C = parse_space_header();
    std::size_t n = C->dim(), nh = inst.hopf->dim();
    Vec unit = parse_vector_block("unit", C, f);
    auto multm = parse_matrix_block("mult", n * n, n, f);
    auto deltam = parse_matrix_block("delta", n * nh, n, f);
    expect_end("product");
    ProductBlock p(var == "bb" ? CocycleVariant::BB : CocycleVariant::AG, C, f,
                   inst.hopf->space());
    p.mult = table_from_matrix(multm, n * n, C, f);
    p.unit = unit;
    p.delta = map_from_matrix(deltam, C, p.delta.codomain(), f);
    inst.product = std::move(p);
  }

  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

}  // namespace

Instance parse_instance(std::istream& in) { return Parser(tokenize(in)).run(); }

Instance parse_instance_string(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

// ----------------------------------------------------------- serializing

namespace {

void check_label(const std::string& l) {
  if (l.find('#') != std::string::npos)
    throw error("basis label '" + l + "' must not contain '#'");
}

void write_vector_block(std::ostream& os, const std::string& name, const Vec& v) {
  os << "begin " << name << "\n";
  for (std::size_t i = 0; i < v.dim(); ++i)
    if (!v[i].is_zero()) os << i << " " << v[i].str() << "\n";
  os << "end " << name << "\n";
}

void write_table_block(std::ostream& os, const std::string& name,
                       const std::vector<Vec>& table, const std::string& suffix = "") {
  os << "begin " << name << (suffix.empty() ? "" : " " + suffix) << "\n";
  for (std::size_t r = 0; r < table.size(); ++r)
    for (std::size_t c = 0; c < table[r].dim(); ++c)
      if (!table[r][c].is_zero())
        os << r << " " << c << " " << table[r][c].str() << "\n";
  os << "end " << name << "\n";
}

void write_map_block(std::ostream& os, const std::string& name, const LinMap& m) {
  os << "begin " << name << "\n";
  for (std::size_t r = 0; r < m.codomain()->dim(); ++r)
    for (std::size_t c = 0; c < m.domain()->dim(); ++c)
      if (!m.at(r, c).is_zero()) os << r << " " << c << " " << m.at(r, c).str() << "\n";
  os << "end " << name << "\n";
}

void write_space_header(std::ostream& os, const Space& s) {
  os << "dim " << s->dim() << "\n";
  os << "basis";
  for (const auto& l : s->labels()) {
    check_label(l);
    os << " " << l;
  }
  os << "\n";
}

}  // namespace

std::string serialize_instance(const Instance& inst) {
  if (!inst.hopf || !inst.algebra)
    throw error("cannot serialize an instance without hopf and algebra blocks");
  std::ostringstream os;
  os << "weakcp-instance v1\n";
  os << "field " << inst.field.description() << "\n";

  const WeakBialgebra& h = *inst.hopf;
  os << "begin hopf\n";
  write_space_header(os, h.space());
  write_vector_block(os, "unit", h.alg.unit);
  write_table_block(os, "mult", h.alg.mult);
  write_table_block(os, "comult", h.coalg.comult);
  {
    Vec cv(h.space(), h.field());
    for (std::size_t i = 0; i < h.dim(); ++i) cv.set(i, h.coalg.counit[i]);
    write_vector_block(os, "counit", cv);
  }
  if (inst.antipode) write_map_block(os, "antipode", *inst.antipode);
  if (inst.antipode_inv) write_map_block(os, "antipode-inv", *inst.antipode_inv);
  os << "end hopf\n";

  os << "begin algebra\n";
  write_space_header(os, inst.algebra->space);
  write_vector_block(os, "unit", inst.algebra->unit);
  write_table_block(os, "mult", inst.algebra->mult);
  os << "end algebra\n";

  if (inst.action) write_table_block(os, "action", *inst.action);
  if (inst.cocycle)
    write_table_block(os, "cocycle", *inst.cocycle, to_string(*inst.cocycle_variant));

  if (inst.product) {
    const ProductBlock& p = *inst.product;
    os << "begin product " << to_string(p.kind) << "\n";
    write_space_header(os, p.carrier);
    write_vector_block(os, "unit", p.unit);
    write_table_block(os, "mult", p.mult);
    write_map_block(os, "delta", p.delta);
    os << "end product\n";
  }
  return os.str();
}

Instance instance_from_fixture(const FixtureBundle& b) {
  Instance inst;
  inst.field = b.hopf.field();
  inst.hopf = b.hopf.wb;
  inst.antipode = b.hopf.antipode;
  inst.antipode_inv = b.hopf.antipode_inv;
  inst.algebra = b.algebra;
  inst.action = b.measuring.action;
  inst.cocycle = b.cocycle.table;
  inst.cocycle_variant = b.cocycle.variant;
  return inst;
}

std::string instance_digest(const Instance& inst) {
  std::string s = serialize_instance(inst);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

// ---------------------------------------------------------------- reports

static std::string witness_indices(const Witness& w) {
  std::string s;
  for (std::size_t i = 0; i < w.indices.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w.indices[i]);
  }
  return s;
}

std::string render_text(const ReportDocument& doc) {
  std::ostringstream os;
  os << "weakcp " << doc.tool_version << "\n";
  os << "instance digest: " << doc.digest << "\n";
  std::size_t failed = 0, checked = 0;
  for (const auto& r : doc.report.results()) {
    os << "condition " << r.id << ": ";
    switch (r.verdict) {
      case Verdict::Pass:
        ++checked;
        os << "PASS (" << r.cases_checked << " cases)";
        break;
      case Verdict::Fail:
        ++checked;
        ++failed;
        os << "FAIL (" << r.cases_checked << " cases)";
        break;
      case Verdict::NotChecked:
        os << "not checked";
        break;
    }
    if (!r.note.empty()) os << " [" << r.note << "]";
    os << "\n";
    if (r.witness) os << "  " << r.witness->describe() << "\n";
  }
  os << "summary: " << (failed == 0 ? "PASS" : "FAIL") << " (" << failed << " of "
     << checked << " checked conditions failed)\n";
  return os.str();
}

std::string render_machine(const ReportDocument& doc) {
  std::ostringstream os;
  os << "WEAKCP " << doc.tool_version << " " << doc.digest << "\n";
  std::size_t failed = 0, checked = 0;
  for (const auto& r : doc.report.results()) {
    switch (r.verdict) {
      case Verdict::Pass:
        ++checked;
        os << "COND " << r.id << " PASS\n";
        break;
      case Verdict::Fail:
        ++checked;
        ++failed;
        os << "COND " << r.id << " FAIL";
        if (r.witness && !r.witness->indices.empty())
          os << " witness=" << witness_indices(*r.witness);
        os << "\n";
        break;
      case Verdict::NotChecked:
        os << "COND " << r.id << " NOTCHECKED\n";
        break;
    }
  }
  os << "SUMMARY " << (failed == 0 ? "PASS" : "FAIL") << " checked=" << checked
     << " failed=" << failed << "\n";
  return os.str();
}

}  // namespace weakcp
