#include "mhgc/io.hpp"

#include "mhgc/error.hpp"

#include "json_writer.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <tuple>

namespace mhgc {

using nlohmann::json;
using detail::dump;

namespace {

// ---------- writing ----------

json group_json(const FiniteGroup& g) {
    return {{"identity", g.identity()}, {"labels", g.labels()}, {"order", g.order()}, {"table", g.table()}};
}

json structure_json(const ComponentAlgebra& a) {
    json out = json::array();
    const std::size_t d = a.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                if (!is_zero(a.c(i, j, k))) out.push_back({i, j, k, format_scalar(a.c(i, j, k))});
    return out;
}

json entries_json(const Matrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!is_zero(m(i, j))) out.push_back({i, j, format_scalar(m(i, j))});
    return out;
}

json entries_json(const SparseMatrix& m) {
    std::vector<std::tuple<std::size_t, std::size_t, const Scalar*>> all;
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (const auto& [i, v] : m.column(j)) all.emplace_back(i, j, &v);
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
        return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
    });
    json out = json::array();
    for (const auto& [i, j, v] : all) out.push_back({i, j, format_scalar(*v)});
    return out;
}

json cells_json(const PiCoalgebra& pc, bool first) {
    json out = json::array();
    for (std::size_t p = 0; p < pc.order(); ++p)
        for (std::size_t q = 0; q < pc.order(); ++q) {
            const Matrix& m = first ? pc.t1(p, q) : pc.t2(p, q);
            out.push_back({{"cell", {p, q}}, {"cols", m.cols()}, {"entries", entries_json(m)}, {"rows", m.rows()}});
        }
    return out;
}

json coalgebra_json(const PiCoalgebra& pc) {
    json comps = json::array();
    for (std::size_t p = 0; p < pc.order(); ++p)
        comps.push_back(
            {{"dimension", pc.dim(p)}, {"group-index", p}, {"structure", structure_json(pc.component(p))}});
    return {{"components", comps},
            {"format-version", kFormatVersion},
            {"group", group_json(pc.group())},
            {"kind", "pi-coalgebra"},
            {"t1", cells_json(pc, true)},
            {"t2", cells_json(pc, false)}};
}

json module_json(const AModule& m, const AModuleAlgebra* alg) {
    json actions = json::array();
    for (std::size_t p = 0; p < m.order(); ++p)
        actions.push_back({{"entries", entries_json(m.action[p])}, {"group-index", p}});
    json out = {{"actions", actions}, {"dimensions", m.dims}};
    if (alg) {
        out["algebra"] = {{"dimension", alg->algebra.dim()}, {"structure", structure_json(alg->algebra)}};
        out["labels"] = alg->labels;
    }
    return out;
}

// ---------- reading ----------

[[noreturn]] void parse_error(const std::string& path, const std::string& what) {
    throw Error(ErrorCode::ParseError, path + ": " + what);
}

void allow_keys(const json& obj, const std::string& path, std::initializer_list<const char*> required,
                std::initializer_list<const char*> optional = {}) {
    if (!obj.is_object()) parse_error(path, "expected an object");
    for (const char* k : required)
        if (!obj.contains(k)) parse_error(path, "missing key '" + std::string(k) + "'");
    for (const auto& item : obj.items()) {
        const auto& k = item.key();
        const auto match = [&](const char* c) { return k == c; };
        if (std::none_of(required.begin(), required.end(), match) &&
            std::none_of(optional.begin(), optional.end(), match))
            parse_error(path, "unknown key '" + k + "'");
    }
}

std::string sub(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

std::size_t read_index(const json& j, const std::string& path, std::size_t bound = SIZE_MAX) {
    if (!j.is_number_unsigned()) parse_error(path, "expected a non-negative integer");
    const auto v = j.get<std::size_t>();
    if (v >= bound) parse_error(path, "index " + std::to_string(v) + " out of range (bound " + std::to_string(bound) + ")");
    return v;
}

const json& read_array(const json& j, const std::string& path) {
    if (!j.is_array()) parse_error(path, "expected an array");
    return j;
}

Scalar read_scalar(const json& j, const std::string& path) {
    if (!j.is_string()) parse_error(path, "expected a rational string");
    try {
        return parse_scalar(j.get<std::string>());
    } catch (const Error& e) {
        throw Error(e.code(), path + ": " + e.message());
    }
}

FiniteGroup read_group(const json& j, const std::string& path) {
    allow_keys(j, path, {"identity", "order", "table"}, {"labels"});
    const std::size_t n = read_index(j["order"], sub(path, "order"));
    const auto& rows = read_array(j["table"], sub(path, "table"));
    if (rows.size() != n) parse_error(sub(path, "table"), "expected " + std::to_string(n) + " rows");
    std::vector<std::vector<std::size_t>> table(n);
    for (std::size_t a = 0; a < n; ++a) {
        const auto& row = read_array(rows[a], at(sub(path, "table"), a));
        if (row.size() != n) parse_error(at(sub(path, "table"), a), "expected " + std::to_string(n) + " entries");
        for (std::size_t b = 0; b < n; ++b) table[a].push_back(read_index(row[b], at(at(sub(path, "table"), a), b), n));
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        const auto& ls = read_array(j["labels"], sub(path, "labels"));
        for (std::size_t i = 0; i < ls.size(); ++i) {
            if (!ls[i].is_string()) parse_error(at(sub(path, "labels"), i), "expected a string");
            labels.push_back(ls[i].get<std::string>());
        }
    }
    const std::size_t identity = read_index(j["identity"], sub(path, "identity"), std::max<std::size_t>(n, 1));
    try {
        return FiniteGroup(std::move(table), identity, std::move(labels));
    } catch (const Error& e) {
        throw Error(ErrorCode::ParseError, path + ": " + e.message());
    }
}

ComponentAlgebra read_structure(const json& j, std::size_t d, const std::string& path) {
    const auto& triples = read_array(j, path);
    std::vector<Scalar> st(d * d * d);
    std::set<std::size_t> seen;
    for (std::size_t t = 0; t < triples.size(); ++t) {
        const std::string p = at(path, t);
        const auto& e = read_array(triples[t], p);
        if (e.size() != 4) parse_error(p, "expected [i, j, k, value]");
        const std::size_t i = read_index(e[0], at(p, 0), d), jj = read_index(e[1], at(p, 1), d),
                          k = read_index(e[2], at(p, 2), d);
        const std::size_t idx = (i * d + jj) * d + k;
        if (!seen.insert(idx).second) parse_error(p, "duplicate entry");
        st[idx] = read_scalar(e[3], at(p, 3));
    }
    return ComponentAlgebra(d, std::move(st));
}

void read_entries(const json& j, const std::string& path, std::size_t rows, std::size_t cols,
                  const std::function<void(std::size_t, std::size_t, Scalar)>& put) {
    const auto& list = read_array(j, path);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t t = 0; t < list.size(); ++t) {
        const std::string p = at(path, t);
        const auto& e = read_array(list[t], p);
        if (e.size() != 3) parse_error(p, "expected [row, col, value]");
        const std::size_t r = read_index(e[0], at(p, 0), rows), c = read_index(e[1], at(p, 1), cols);
        if (!seen.emplace(r, c).second) parse_error(p, "duplicate entry");
        put(r, c, read_scalar(e[2], at(p, 2)));
    }
}

Matrix read_dense(const json& j, const std::string& path, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    read_entries(j, path, rows, cols, [&](std::size_t r, std::size_t c, Scalar v) { m(r, c) = std::move(v); });
    return m;
}

SparseMatrix read_sparse(const json& j, const std::string& path, std::size_t rows, std::size_t cols) {
    std::vector<std::vector<SparseMatrix::Entry>> columns(cols);
    read_entries(j, path, rows, cols,
                 [&](std::size_t r, std::size_t c, Scalar v) { columns[c].emplace_back(r, std::move(v)); });
    SparseMatrix m(rows, cols);
    for (std::size_t c = 0; c < cols; ++c)
        if (!columns[c].empty()) m.set_column(c, std::move(columns[c]));
    return m;
}

std::vector<Matrix> read_cells(const json& j, const std::string& path, const FiniteGroup& g,
                               const std::vector<std::size_t>& dims, bool first) {
    const std::size_t n = g.order();
    const auto& list = read_array(j, path);
    std::vector<std::optional<Matrix>> cells(n * n);
    for (std::size_t t = 0; t < list.size(); ++t) {
        const std::string p = at(path, t);
        allow_keys(list[t], p, {"cell", "cols", "entries", "rows"});
        const auto& cell = read_array(list[t]["cell"], sub(p, "cell"));
        if (cell.size() != 2) parse_error(sub(p, "cell"), "expected [p, q]");
        const std::size_t a = read_index(cell[0], at(sub(p, "cell"), 0), n),
                          b = read_index(cell[1], at(sub(p, "cell"), 1), n);
        if (cells[a * n + b]) parse_error(p, "duplicate cell");
        const std::size_t rows = read_index(list[t]["rows"], sub(p, "rows"));
        const std::size_t cols = read_index(list[t]["cols"], sub(p, "cols"));
        const std::size_t er = dims[a] * dims[b];
        const std::size_t ec = first ? dims[g.mul(a, b)] * dims[b] : dims[a] * dims[g.mul(a, b)];
        if (rows != er || cols != ec)
            throw Error(ErrorCode::DimensionMismatch,
                        p + ": " + (first ? "t1" : "t2") + " block (" + g.label(a) + "," + g.label(b) + ") is " +
                            std::to_string(rows) + "x" + std::to_string(cols) + ", expected " + std::to_string(er) +
                            "x" + std::to_string(ec));
        cells[a * n + b] = read_dense(list[t]["entries"], sub(p, "entries"), rows, cols);
    }
    std::vector<Matrix> out;
    for (std::size_t c = 0; c < n * n; ++c) {
        if (!cells[c])
            parse_error(path, "missing cell (" + g.label(c / n) + "," + g.label(c % n) + ")");
        out.push_back(std::move(*cells[c]));
    }
    return out;
}

PiCoalgebra read_coalgebra(const json& j) {
    const FiniteGroup g = read_group(j["group"], "group");
    const std::size_t n = g.order();
    const auto& comps = read_array(j["components"], "components");
    std::vector<std::optional<ComponentAlgebra>> parts(n);
    std::vector<std::size_t> dims(n);
    for (std::size_t t = 0; t < comps.size(); ++t) {
        const std::string p = at("components", t);
        allow_keys(comps[t], p, {"dimension", "group-index", "structure"});
        const std::size_t idx = read_index(comps[t]["group-index"], sub(p, "group-index"), n);
        if (parts[idx]) parse_error(p, "duplicate component for " + g.label(idx));
        const std::size_t d = read_index(comps[t]["dimension"], sub(p, "dimension"));
        parts[idx] = read_structure(comps[t]["structure"], d, sub(p, "structure"));
        dims[idx] = d;
    }
    std::vector<ComponentAlgebra> components;
    for (std::size_t p = 0; p < n; ++p) {
        if (!parts[p]) parse_error("components", "missing component for " + g.label(p));
        components.push_back(std::move(*parts[p]));
    }
    auto t1 = read_cells(j["t1"], "t1", g, dims, true);
    auto t2 = read_cells(j["t2"], "t2", g, dims, false);
    return PiCoalgebra(g, std::move(components), std::move(t1), std::move(t2));
}

void read_module(const json& j, const PiCoalgebra& pc, Document& doc) {
    const std::string path = "module";
    allow_keys(j, path, {"actions", "dimensions"}, {"algebra", "labels"});
    const std::size_t n = pc.order();
    const auto& dl = read_array(j["dimensions"], sub(path, "dimensions"));
    if (dl.size() != n) parse_error(sub(path, "dimensions"), "expected " + std::to_string(n) + " entries");
    AModule m;
    for (std::size_t p = 0; p < n; ++p) m.dims.push_back(read_index(dl[p], at(sub(path, "dimensions"), p)));
    std::vector<std::optional<Matrix>> acts(n);
    const auto& al = read_array(j["actions"], sub(path, "actions"));
    for (std::size_t t = 0; t < al.size(); ++t) {
        const std::string p = at(sub(path, "actions"), t);
        allow_keys(al[t], p, {"entries", "group-index"});
        const std::size_t idx = read_index(al[t]["group-index"], sub(p, "group-index"), n);
        if (acts[idx]) parse_error(p, "duplicate action for " + pc.group().label(idx));
        acts[idx] = read_dense(al[t]["entries"], sub(p, "entries"), m.dims[idx], pc.dim(idx) * m.dims[idx]);
    }
    for (std::size_t p = 0; p < n; ++p) {
        if (!acts[p]) parse_error(sub(path, "actions"), "missing action for " + pc.group().label(p));
        m.action.push_back(std::move(*acts[p]));
    }
    const bool has_alg = j.contains("algebra"), has_labels = j.contains("labels");
    if (has_alg != has_labels)
        throw Error(ErrorCode::NotGraded, path + ": a module algebra needs both 'algebra' and grading 'labels'");
    if (has_alg) {
        const std::string ap = sub(path, "algebra");
        allow_keys(j["algebra"], ap, {"dimension", "structure"});
        const std::size_t d = read_index(j["algebra"]["dimension"], sub(ap, "dimension"));
        ComponentAlgebra alg = read_structure(j["algebra"]["structure"], d, sub(ap, "structure"));
        std::vector<std::size_t> labels;
        const auto& ll = read_array(j["labels"], sub(path, "labels"));
        for (std::size_t i = 0; i < ll.size(); ++i) labels.push_back(read_index(ll[i], at(sub(path, "labels"), i), n));
        doc.module_algebra = make_module_algebra(pc.group(), m, std::move(alg), std::move(labels));
    }
    doc.module = std::move(m);
}

CogradedMHA read_cograded(const json& j) {
    CogradedMHA cm;
    cm.group = read_group(j["group"], "group");
    const std::size_t n = cm.group.order();
    const std::size_t d = read_index(j["dimension"], "dimension");
    cm.algebra = read_structure(j["structure"], d, "structure");
    const auto& ll = read_array(j["labels"], "labels");
    if (ll.size() != d) parse_error("labels", "expected " + std::to_string(d) + " entries");
    for (std::size_t i = 0; i < d; ++i) cm.labels.push_back(read_index(ll[i], at("labels", i), n));
    cm.t1g = read_sparse(j["t1g"], "t1g", d * d, d * d);
    cm.t2g = read_sparse(j["t2g"], "t2g", d * d, d * d);
    const auto& gl = read_array(j["gamma"], "gamma");
    std::vector<std::optional<Multiplier>> gamma(n);
    for (std::size_t t = 0; t < gl.size(); ++t) {
        const std::string p = at("gamma", t);
        allow_keys(gl[t], p, {"group-index", "left", "right"});
        const std::size_t idx = read_index(gl[t]["group-index"], sub(p, "group-index"), n);
        if (gamma[idx]) parse_error(p, "duplicate entry for " + cm.group.label(idx));
        gamma[idx] = Multiplier{read_dense(gl[t]["left"], sub(p, "left"), d, d),
                                read_dense(gl[t]["right"], sub(p, "right"), d, d)};
    }
    for (std::size_t p = 0; p < n; ++p) {
        if (!gamma[p]) parse_error("gamma", "missing entry for " + cm.group.label(p));
        cm.gamma.push_back(std::move(*gamma[p]));
    }
    return cm;
}

}  // namespace

std::string save(const PiCoalgebra& pc) { return dump(coalgebra_json(pc)); }

std::string save(const CogradedMHA& cm) {
    json gamma = json::array();
    for (std::size_t p = 0; p < cm.gamma.size(); ++p)
        gamma.push_back({{"group-index", p}, {"left", entries_json(cm.gamma[p].left)},
                         {"right", entries_json(cm.gamma[p].right)}});
    const json j = {{"dimension", cm.dim()},
                    {"format-version", kFormatVersion},
                    {"gamma", gamma},
                    {"group", group_json(cm.group)},
                    {"kind", "cograded"},
                    {"labels", cm.labels},
                    {"structure", structure_json(cm.algebra)},
                    {"t1g", entries_json(cm.t1g)},
                    {"t2g", entries_json(cm.t2g)}};
    return dump(j);
}

std::string save(const Document& doc) {
    if (doc.cograded) return save(*doc.cograded);
    if (!doc.coalgebra) throw Error(ErrorCode::InvalidArgument, "empty document");
    json j = coalgebra_json(*doc.coalgebra);
    if (doc.module_algebra)
        j["module"] = module_json(doc.module_algebra->module, &*doc.module_algebra);
    else if (doc.module)
        j["module"] = module_json(*doc.module, nullptr);
    return dump(j);
}

Document load(std::string_view text) {
    json j;
    try {
        j = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ParseError, std::string("malformed document: ") + e.what());
    }
    if (!j.is_object()) parse_error("document", "expected an object");
    if (!j.contains("kind") || !j["kind"].is_string()) parse_error("kind", "missing or not a string");
    if (!j.contains("format-version") || !j["format-version"].is_number_integer())
        parse_error("format-version", "missing or not an integer");
    if (j["format-version"].get<long long>() != kFormatVersion)
        parse_error("format-version", "unsupported version " + j["format-version"].dump());
    const std::string kind = j["kind"].get<std::string>();
    Document doc;
    if (kind == "pi-coalgebra") {
        allow_keys(j, "document", {"components", "format-version", "group", "kind", "t1", "t2"}, {"module"});
        doc.coalgebra = read_coalgebra(j);
        if (j.contains("module")) read_module(j["module"], *doc.coalgebra, doc);
    } else if (kind == "cograded") {
        allow_keys(j, "document", {"dimension", "format-version", "gamma", "group", "kind", "labels", "structure", "t1g", "t2g"});
        doc.cograded = read_cograded(j);
    } else {
        parse_error("kind", "unknown document kind '" + kind + "'");
    }
    return doc;
}

FiniteGroup load_group(std::string_view text) {
    json j;
    try {
        j = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ParseError, std::string("malformed group table: ") + e.what());
    }
    return read_group(j, "group");
}

Document load_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return load(ss.str());
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path.string());
    out << text;
    if (!out) throw Error(ErrorCode::ParseError, "write failed for " + path.string());
}

}  // namespace mhgc
