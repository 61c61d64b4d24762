#include "holonomy/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "holonomy/errors.hpp"

namespace holonomy {

using nlohmann::json;

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorKind::Config, "cannot write " + path);
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::Config, "cannot read " + path);
    return in;
}

}  // namespace

void write_graph_json(const ColoredGraph& g, std::ostream& out) {
    const auto n = g.vertex_count();
    out << "{\"vertices\": " << n << ",\n\"edges\": [";
    bool first = true;
    std::vector<std::pair<VertexId, Color>> row;
    for (VertexId u = 0; u < n; ++u) {
        row.clear();
        for (Color c : kColors) {
            const VertexId v = g.neighbor(u, c);
            if (v != kNoVertex && u < v) row.emplace_back(v, c);
        }
        std::sort(row.begin(), row.end());
        for (auto [v, c] : row) {
            out << (first ? "\n" : ",\n") << '[' << u << ',' << v << ",\"" << to_char(c) << "\"]";
            first = false;
        }
    }
    out << "\n],\n\"meta\": [";
    for (VertexId v = 0; v < n; ++v) {
        const auto& m = g.meta(v);
        out << (v == 0 ? "\n" : ",\n") << "{\"stage\":" << m.stage << ",\"role\":\"" << role_tag(m) << "\"}";
    }
    out << "\n]}\n";
    if (!out) fail(ErrorKind::Config, "write failed");
}

void write_graph_json(const ColoredGraph& g, const std::string& path) {
    auto out = open_out(path);
    write_graph_json(g, out);
}

namespace {

// SAX handler for the graph format. Tracks the position by a small state
// machine instead of building a document.
class GraphSax {
public:
    explicit GraphSax(RawGraph& raw) : raw_(raw) {}

    bool null() { return bad("unexpected null"); }
    bool boolean(bool) { return bad("unexpected boolean"); }
    bool number_integer(json::number_integer_t v) {
        if (v < 0) return bad("negative number");
        return number_unsigned(static_cast<json::number_unsigned_t>(v));
    }
    bool number_unsigned(json::number_unsigned_t v) {
        if (depth_ == 1 && key_ == "vertices") {
            raw_.vertices = v;
            have_vertices_ = true;
            return true;
        }
        if (depth_ == 3 && key_ == "edges") {
            if (field_ > 1 || v >= kNoVertex) return bad("bad edge endpoint");
            ends_[field_++] = static_cast<VertexId>(v);
            return true;
        }
        if (depth_ == 3 && key_ == "meta" && inner_key_ == "stage") {
            if (v > UINT16_MAX) return bad("stage out of range");
            stage_ = static_cast<std::uint16_t>(v);
            return true;
        }
        if (depth_ == 3 && key_ == "meta") return true;  // unknown numeric meta fields are ignored
        return bad("unexpected number");
    }
    bool number_float(json::number_float_t, const std::string&) { return bad("unexpected float"); }
    bool string(std::string& s) {
        if (depth_ == 3 && key_ == "edges") {
            if (field_ != 2 || s.size() != 1 || !color_from_char(s[0])) return bad("bad edge color '" + s + "'");
            color_ = *color_from_char(s[0]);
            ++field_;
            return true;
        }
        if (depth_ == 3 && key_ == "meta" && inner_key_ == "role") {
            role_ = s;
            return true;
        }
        if (depth_ == 3 && key_ == "meta") return true;
        return bad("unexpected string");
    }
    bool binary(json::binary_t&) { return bad("unexpected binary"); }
    bool start_object(std::size_t) {
        ++depth_;
        if (depth_ == 3) {
            if (key_ != "meta") return bad("unexpected object");
            stage_ = 0;
            role_ = "none";
        } else if (depth_ != 1) {
            return bad("unexpected object");
        }
        return true;
    }
    bool end_object() {
        if (depth_ == 3) {
            auto meta = parse_role_tag(role_, stage_);
            if (!meta) return bad("unknown role '" + role_ + "'");
            raw_.meta.push_back(*meta);
        }
        --depth_;
        return true;
    }
    bool start_array(std::size_t) {
        ++depth_;
        if (depth_ == 2 && (key_ == "edges" || key_ == "meta")) return true;
        if (depth_ == 3 && key_ == "edges") {
            field_ = 0;
            return true;
        }
        return bad("unexpected array");
    }
    bool end_array() {
        if (depth_ == 3 && key_ == "edges") {
            if (field_ != 3) return bad("edge needs [u, v, color]");
            raw_.edges.push_back({ends_[0], ends_[1], color_});
        }
        --depth_;
        return true;
    }
    bool key(std::string& k) {
        if (depth_ == 1) key_ = k;
        else inner_key_ = k;
        return true;
    }
    bool parse_error(std::size_t position, const std::string&, const nlohmann::detail::exception& ex) {
        error_ = "malformed graph file at byte " + std::to_string(position) + ": " + ex.what();
        return false;
    }

    const std::string& error() const { return error_; }
    bool have_vertices() const { return have_vertices_; }

private:
    bool bad(const std::string& what) {
        error_ = "malformed graph file: " + what;
        return false;
    }

    RawGraph& raw_;
    int depth_ = 0;
    std::string key_, inner_key_, role_, error_;
    std::array<VertexId, 2> ends_{};
    Color color_ = Color::A;
    int field_ = 0;
    std::uint16_t stage_ = 0;
    bool have_vertices_ = false;
};

}  // namespace

RawGraph read_graph_json(std::istream& in) {
    RawGraph raw;
    GraphSax sax(raw);
    const bool ok = json::sax_parse(in, &sax);
    if (!ok) fail(ErrorKind::Config, sax.error().empty() ? "malformed graph file" : sax.error());
    if (!sax.have_vertices()) fail(ErrorKind::Config, "graph file lacks \"vertices\"");
    if (raw.vertices >= kNoVertex) fail(ErrorKind::Config, "too many vertices");
    for (const auto& e : raw.edges) {
        if (e.u >= raw.vertices || e.v >= raw.vertices) {
            std::ostringstream msg;
            msg << "edge [" << e.u << "," << e.v << "] out of range";
            fail(ErrorKind::Config, msg.str());
        }
    }
    if (!raw.meta.empty() && raw.meta.size() != raw.vertices)
        fail(ErrorKind::Config, "meta list length differs from the vertex count");
    return raw;
}

RawGraph read_graph_json(const std::string& path) {
    auto in = open_in(path);
    return read_graph_json(in);
}

ColoredGraph assemble(const RawGraph& raw) {
    ColoredGraph g(raw.vertices);
    for (VertexId v = 0; v < raw.meta.size(); ++v) g.set_meta(v, raw.meta[v]);
    for (const auto& e : raw.edges) g.add_edge(e.u, e.v, e.color);
    g.freeze();
    return g;
}

std::string properness_problem(const RawGraph& raw) {
    try {
        assemble(raw);
    } catch (const Error& e) {
        return e.what();
    }
    return {};
}

// ---- build log ----

namespace {

json range_json(const IdRange& r) { return json::array({r.begin, r.end}); }

IdRange range_from(const json& j) { return {j.at(0).get<VertexId>(), j.at(1).get<VertexId>()}; }

json vertex_or_null(VertexId v) { return v == kNoVertex ? json(nullptr) : json(v); }

VertexId vertex_from(const json& j) { return j.is_null() ? kNoVertex : j.get<VertexId>(); }

json distance_json(Distance d) { return d == kUnreached ? json(nullptr) : json(d); }

Distance distance_from(const json& j) { return j.is_null() ? kUnreached : j.get<Distance>(); }

json config_json(const ConstructionConfig& c) {
    return {{"m", c.m},
            {"levels", c.levels},
            {"schedule", to_string(c.schedule)},
            {"diam_multiplier", c.diam_multiplier},
            {"girth", c.girth_target},
            {"chord", c.chord_span},
            {"seed", c.seed},
            {"max_vertices", c.max_vertices}};
}

ConstructionConfig config_from(const json& j) {
    ConstructionConfig c;
    c.m = j.at("m").get<std::uint64_t>();
    c.levels = j.at("levels").get<std::uint32_t>();
    c.schedule = schedule_mode_from_string(j.at("schedule").get<std::string>());
    c.diam_multiplier = j.at("diam_multiplier").get<std::uint64_t>();
    c.girth_target = j.at("girth").get<Distance>();
    c.chord_span = j.at("chord").get<std::uint32_t>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.max_vertices = j.value("max_vertices", c.max_vertices);
    return c;
}

json stage_json(const StageLog& st) {
    json j;
    j["stage"] = st.stage;
    j["H"] = range_json(st.h);
    j["omega"] = range_json(st.omega);
    j["s"] = st.scales;
    j["R"] = st.nets;
    j["R_remainder_count"] = st.remainder_count;
    json checks = json::array();
    for (const auto& nd : st.net_checks) {
        checks.push_back({{"scale", nd.scale},
                          {"count", nd.count},
                          {"min_separation", distance_json(nd.min_separation)},
                          {"covering_radius", distance_json(nd.covering_radius)},
                          {"density", nd.density},
                          {"density_hypotheses", nd.density_hypotheses},
                          {"density_passed", nd.density_passed}});
    }
    j["net_checks"] = checks;
    json copies = json::array();
    for (const auto& cg : st.copies) {
        copies.push_back(
            {{"of", cg.of}, {"size", cg.size}, {"root", cg.root}, {"first", cg.first}, {"attach", cg.attach}});
    }
    j["copies"] = copies;
    j["prev"] = {{"attach", vertex_or_null(st.prev_attach)}, {"root", vertex_or_null(st.prev_root)}};
    if (st.word) {
        j["word"] = {{"index", st.word->index},
                     {"text", st.word->text},
                     {"anchor", st.word->anchor},
                     {"path", st.word->path},
                     {"witness", st.word->witness}};
    } else {
        j["word"] = nullptr;
    }
    j["x"] = vertex_or_null(st.x);
    j["r"] = vertex_or_null(st.r);
    j["block"] = {{"kind", st.block.kind},
                  {"diameter_bound", st.block.diameter_bound},
                  {"girth", distance_json(st.block.girth)},
                  {"sheets", st.block.sheets},
                  {"voltages", st.block.voltages},
                  {"min_chord_span", st.block.min_chord_span}};
    j["size"] = st.graph_size;
    j["attachment_ratio"] = st.attachment_ratio;
    j["outside_fraction"] = st.outside_fraction;
    return j;
}

StageLog stage_from(const json& j) {
    StageLog st;
    st.stage = j.at("stage").get<std::uint32_t>();
    st.h = range_from(j.at("H"));
    st.omega = range_from(j.at("omega"));
    st.scales = j.at("s").get<std::vector<std::uint64_t>>();
    st.nets = j.at("R").get<std::vector<std::vector<VertexId>>>();
    st.remainder_count = j.at("R_remainder_count").get<std::uint64_t>();
    for (const auto& c : j.at("net_checks")) {
        NetDiagnostics nd;
        nd.scale = c.at("scale").get<std::uint64_t>();
        nd.count = c.at("count").get<std::uint64_t>();
        nd.min_separation = distance_from(c.at("min_separation"));
        nd.covering_radius = distance_from(c.at("covering_radius"));
        nd.density = c.at("density").get<double>();
        nd.density_hypotheses = c.at("density_hypotheses").get<bool>();
        nd.density_passed = c.at("density_passed").get<bool>();
        st.net_checks.push_back(nd);
    }
    for (const auto& c : j.at("copies")) {
        CopyGroup cg;
        cg.of = c.at("of").get<std::uint32_t>();
        cg.size = c.at("size").get<std::uint64_t>();
        cg.root = c.at("root").get<VertexId>();
        cg.first = c.at("first").get<VertexId>();
        cg.attach = c.at("attach").get<std::vector<VertexId>>();
        st.copies.push_back(std::move(cg));
    }
    st.prev_attach = vertex_from(j.at("prev").at("attach"));
    st.prev_root = vertex_from(j.at("prev").at("root"));
    if (!j.at("word").is_null()) {
        const auto& w = j.at("word");
        WordPath wp;
        wp.index = w.at("index").get<std::uint64_t>();
        wp.text = w.at("text").get<std::string>();
        wp.anchor = w.at("anchor").get<VertexId>();
        wp.path = w.at("path").get<std::vector<VertexId>>();
        wp.witness = w.at("witness").get<VertexId>();
        st.word = std::move(wp);
    }
    st.x = vertex_from(j.at("x"));
    st.r = vertex_from(j.at("r"));
    const auto& b = j.at("block");
    st.block.kind = b.at("kind").get<std::string>();
    st.block.diameter_bound = b.at("diameter_bound").get<Distance>();
    st.block.girth = distance_from(b.at("girth"));
    st.block.sheets = b.at("sheets").get<std::uint64_t>();
    st.block.voltages = b.at("voltages").get<std::array<std::int32_t, 7>>();
    st.block.min_chord_span = b.at("min_chord_span").get<std::uint32_t>();
    st.graph_size = j.at("size").get<std::uint64_t>();
    st.attachment_ratio = j.at("attachment_ratio").get<double>();
    st.outside_fraction = j.at("outside_fraction").get<double>();
    return st;
}

}  // namespace

void write_build_log(const BuildLog& log, std::ostream& out) {
    json j;
    j["config"] = config_json(log.config);
    j["p"] = log.p;
    json stages = json::array();
    for (const auto& st : log.stages) stages.push_back(stage_json(st));
    j["stages"] = stages;
    out << j.dump(1) << '\n';
    if (!out) fail(ErrorKind::Config, "write failed");
}

void write_build_log(const BuildLog& log, const std::string& path) {
    auto out = open_out(path);
    write_build_log(log, out);
}

BuildLog read_build_log(std::istream& in) {
    try {
        const json j = json::parse(in);
        BuildLog log;
        log.config = config_from(j.at("config"));
        log.p = j.at("p").get<VertexId>();
        for (const auto& s : j.at("stages")) log.stages.push_back(stage_from(s));
        if (log.stages.empty()) fail(ErrorKind::Config, "build log has no stages");
        for (std::size_t i = 0; i < log.stages.size(); ++i)
            if (log.stages[i].stage != i + 1) fail(ErrorKind::Config, "build log stages out of order");
        return log;
    } catch (const json::exception& e) {
        fail(ErrorKind::Config, std::string("malformed build log: ") + e.what());
    }
}

BuildLog read_build_log(const std::string& path) {
    auto in = open_in(path);
    return read_build_log(in);
}

}  // namespace holonomy
