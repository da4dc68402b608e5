#include "topdyn/io.hpp"

#include <fstream>
#include <sstream>

namespace topdyn::io {

using findyn::FinSystem;
using findyn::PropertyReport;
using fintop::FinSpace;

static json pointset_to_json(const PointSet& s) {
    json arr = json::array();
    for (auto i : s.indices()) arr.push_back(i);
    return arr;
}

static PointSet pointset_from_json(const json& j, std::uint32_t n) {
    if (!j.is_array()) throw Error("expected an array of point indices");
    PointSet out = PointSet::empty_set(n);
    for (const auto& v : j) {
        if (!v.is_number_unsigned()) throw Error("point indices must be nonnegative integers");
        const std::uint64_t i = v.get<std::uint64_t>();
        if (i >= n) throw Error("point index " + std::to_string(i) + " out of range");
        out.add(static_cast<std::uint32_t>(i));
    }
    return out;
}

json space_to_json(const FinSpace& s) {
    json j;
    j["points"] = s.n;
    json nb = json::array();
    for (const auto& m : s.min_nbhd) nb.push_back(pointset_to_json(m));
    j["min_nbhd"] = nb;
    return j;
}

FinSpace space_from_json(const json& j) {
    if (!j.is_object() || !j.contains("points") || !j.contains("min_nbhd"))
        throw Error("space document needs \"points\" and \"min_nbhd\"");
    if (!j["points"].is_number_unsigned()) throw Error("\"points\" must be a nonnegative integer");
    const std::uint64_t n64 = j["points"].get<std::uint64_t>();
    if (n64 == 0 || n64 > 64) throw Error("\"points\" must be between 1 and 64");
    const auto n = static_cast<std::uint32_t>(n64);
    if (!j["min_nbhd"].is_array() || j["min_nbhd"].size() != n)
        throw Error("\"min_nbhd\" must list one set per point");
    std::vector<PointSet> nb;
    for (const auto& m : j["min_nbhd"]) nb.push_back(pointset_from_json(m, n));
    return fintop::space_from_min_nbhds(n, std::move(nb));
}

json system_to_json(const FinSystem& s) {
    json j = space_to_json(s.space);
    j["map"] = s.map;
    if (!s.labels.empty()) j["labels"] = s.labels;
    return j;
}

FinSystem system_from_json(const json& j) {
    FinSpace space = space_from_json(j);
    if (!j.contains("map") || !j["map"].is_array() || j["map"].size() != space.n)
        throw Error("system document needs a \"map\" array with one entry per point");
    std::vector<std::uint32_t> table;
    for (const auto& v : j["map"]) {
        if (!v.is_number_unsigned()) throw Error("map entries must be nonnegative integers");
        const std::uint64_t t = v.get<std::uint64_t>();
        if (t >= space.n) throw Error("map entry " + std::to_string(t) + " out of range");
        table.push_back(static_cast<std::uint32_t>(t));
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        if (!j["labels"].is_array() || j["labels"].size() != space.n)
            throw Error("\"labels\" must list one string per point");
        for (const auto& v : j["labels"]) labels.push_back(v.get<std::string>());
    }
    return findyn::system_new(std::move(space), std::move(table), std::move(labels));
}

static json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

FinSystem load_system_file(const std::string& path) { return system_from_json(parse_file(path)); }

FinSpace load_space_file(const std::string& path) { return space_from_json(parse_file(path)); }

fintop::DensityBasis load_basis_file(const std::string& path, std::uint32_t n) {
    json j = parse_file(path);
    if (!j.is_object() || !j.contains("sets") || !j["sets"].is_array())
        throw Error("basis document needs a \"sets\" array");
    fintop::DensityBasis d;
    for (const auto& s : j["sets"]) d.sets.push_back(pointset_from_json(s, n));
    return d;
}

static json epset_to_json(const EPSet& e) {
    auto bits = [](const std::vector<bool>& v) {
        std::string s;
        for (bool b : v) s += b ? '1' : '0';
        return s;
    };
    return json{{"pre", bits(e.preperiod())}, {"per", bits(e.period())}};
}

static EPSet epset_from_json(const json& j) {
    auto bits = [](const std::string& s) {
        std::vector<bool> v;
        for (char c : s) v.push_back(c == '1');
        return v;
    };
    return EPSet::from_bits(bits(j.at("pre").get<std::string>()),
                            bits(j.at("per").get<std::string>()));
}

json report_to_json(const PropertyReport& r) {
    json j;
    j["verdicts"] = {{"IN", r.in},   {"TT", r.tt},        {"TT+", r.tt_plus},
                     {"TT++", r.tt_plusplus}, {"DO", r.do_}, {"DO+", r.do_plus},
                     {"DO++", r.do_plusplus}};
    j["trans"] = pointset_to_json(r.trans);
    j["iso"] = pointset_to_json(r.iso);

    json w;
    if (r.in) {
        json meets = json::array();
        for (const auto& m : r.in_meets)
            meets.push_back({{"u", m.u}, {"v", m.v}, {"point", m.point}});
        w["IN"] = {{"meets", meets}};
    } else if (r.in_cover) {
        w["IN"] = {{"cover", {{"a1", pointset_to_json(r.in_cover->a1)},
                              {"a2", pointset_to_json(r.in_cover->a2)}}}};
    }
    auto hits_json = [](const std::vector<findyn::SignedHit>& hits) {
        json arr = json::array();
        for (const auto& h : hits) arr.push_back({{"u", h.u}, {"v", h.v}, {"k", h.k}});
        return arr;
    };
    auto refuted_json = [](const findyn::PairRefutation& p) {
        return json{{"u", p.u},
                    {"v", p.v},
                    {"n_uv", epset_to_json(p.n_uv)},
                    {"n_vu", epset_to_json(p.n_vu)}};
    };
    if (r.tt)
        w["TT"] = {{"hits", hits_json(r.tt_hits)}};
    else if (r.tt_refuted)
        w["TT"] = {{"refuted", refuted_json(*r.tt_refuted)}};
    if (r.tt_plus)
        w["TT+"] = {{"hits", hits_json(r.ttp_hits)}};
    else if (r.ttp_refuted)
        w["TT+"] = {{"refuted", refuted_json(*r.ttp_refuted)}};
    if (r.tt_plusplus) {
        json arr = json::array();
        for (const auto& h : r.ttpp_hits)
            arr.push_back({{"u", h.u}, {"v", h.v}, {"start", h.start}, {"step", h.step}});
        w["TT++"] = {{"hits", arr}};
    } else if (r.ttpp_refuted) {
        w["TT++"] = {{"refuted", refuted_json(*r.ttpp_refuted)}};
    }
    if (r.do_ && r.do_witness) {
        w["DO"] = {{"witness", {{"half_infinite", r.do_witness->half_infinite},
                                {"start", r.do_witness->start},
                                {"elements", pointset_to_json(r.do_witness->elements)}}}};
    } else if (!r.do_) {
        json arr = json::array();
        for (const auto& f : r.do_failures)
            arr.push_back({{"half_infinite", f.half_infinite},
                           {"start", f.start},
                           {"missed", f.missed}});
        w["DO"] = {{"failures", arr}};
    }
    auto point_failures = [](const std::vector<findyn::PointFailure>& fs) {
        json arr = json::array();
        for (const auto& f : fs) arr.push_back({{"point", f.point}, {"missed", f.missed}});
        return arr;
    };
    if (r.do_plus && r.dop_point)
        w["DO+"] = {{"point", *r.dop_point}};
    else if (!r.do_plus)
        w["DO+"] = {{"failures", point_failures(r.dop_failures)}};
    if (r.do_plusplus && r.dopp_point)
        w["DO++"] = {{"point", *r.dopp_point}};
    else if (!r.do_plusplus)
        w["DO++"] = {{"failures", point_failures(r.dopp_failures)}};
    j["witnesses"] = w;
    return j;
}

PropertyReport report_from_json(const json& j, std::uint32_t n) {
    PropertyReport r;
    const auto& v = j.at("verdicts");
    r.in = v.at("IN").get<bool>();
    r.tt = v.at("TT").get<bool>();
    r.tt_plus = v.at("TT+").get<bool>();
    r.tt_plusplus = v.at("TT++").get<bool>();
    r.do_ = v.at("DO").get<bool>();
    r.do_plus = v.at("DO+").get<bool>();
    r.do_plusplus = v.at("DO++").get<bool>();
    r.trans = pointset_from_json(j.at("trans"), n);
    r.iso = pointset_from_json(j.at("iso"), n);

    const auto& w = j.at("witnesses");
    auto hits_from = [](const json& arr) {
        std::vector<findyn::SignedHit> out;
        for (const auto& h : arr)
            out.push_back({h.at("u").get<std::uint32_t>(), h.at("v").get<std::uint32_t>(),
                           h.at("k").get<std::int64_t>()});
        return out;
    };
    auto refuted_from = [](const json& p) {
        return findyn::PairRefutation{p.at("u").get<std::uint32_t>(),
                                      p.at("v").get<std::uint32_t>(),
                                      epset_from_json(p.at("n_uv")),
                                      epset_from_json(p.at("n_vu"))};
    };
    if (w.contains("IN")) {
        if (w["IN"].contains("meets"))
            for (const auto& m : w["IN"]["meets"])
                r.in_meets.push_back({m.at("u").get<std::uint32_t>(),
                                      m.at("v").get<std::uint32_t>(),
                                      m.at("point").get<std::uint32_t>()});
        if (w["IN"].contains("cover"))
            r.in_cover = findyn::InCover{pointset_from_json(w["IN"]["cover"].at("a1"), n),
                                         pointset_from_json(w["IN"]["cover"].at("a2"), n)};
    }
    if (w.contains("TT")) {
        if (w["TT"].contains("hits")) r.tt_hits = hits_from(w["TT"]["hits"]);
        if (w["TT"].contains("refuted")) r.tt_refuted = refuted_from(w["TT"]["refuted"]);
    }
    if (w.contains("TT+")) {
        if (w["TT+"].contains("hits")) r.ttp_hits = hits_from(w["TT+"]["hits"]);
        if (w["TT+"].contains("refuted")) r.ttp_refuted = refuted_from(w["TT+"]["refuted"]);
    }
    if (w.contains("TT++")) {
        if (w["TT++"].contains("hits"))
            for (const auto& h : w["TT++"]["hits"])
                r.ttpp_hits.push_back({h.at("u").get<std::uint32_t>(),
                                       h.at("v").get<std::uint32_t>(),
                                       h.at("start").get<std::uint64_t>(),
                                       h.at("step").get<std::uint64_t>()});
        if (w["TT++"].contains("refuted")) r.ttpp_refuted = refuted_from(w["TT++"]["refuted"]);
    }
    if (w.contains("DO")) {
        if (w["DO"].contains("witness")) {
            const auto& d = w["DO"]["witness"];
            r.do_witness = findyn::OrbitSeqWitness{
                d.at("half_infinite").get<bool>(), d.at("start").get<std::uint32_t>(),
                pointset_from_json(d.at("elements"), n)};
        }
        if (w["DO"].contains("failures"))
            for (const auto& f : w["DO"]["failures"])
                r.do_failures.push_back({f.at("half_infinite").get<bool>(),
                                         f.at("start").get<std::uint32_t>(),
                                         f.at("missed").get<std::uint32_t>()});
    }
    auto point_failures_from = [](const json& arr) {
        std::vector<findyn::PointFailure> out;
        for (const auto& f : arr)
            out.push_back(
                {f.at("point").get<std::uint32_t>(), f.at("missed").get<std::uint32_t>()});
        return out;
    };
    if (w.contains("DO+")) {
        if (w["DO+"].contains("point")) r.dop_point = w["DO+"]["point"].get<std::uint32_t>();
        if (w["DO+"].contains("failures"))
            r.dop_failures = point_failures_from(w["DO+"]["failures"]);
    }
    if (w.contains("DO++")) {
        if (w["DO++"].contains("point")) r.dopp_point = w["DO++"]["point"].get<std::uint32_t>();
        if (w["DO++"].contains("failures"))
            r.dopp_failures = point_failures_from(w["DO++"]["failures"]);
    }
    return r;
}

json classification_to_json(const findyn::Classification& c) {
    json j;
    j["case"] = findyn::to_string(c.tag);
    j["cycle_len"] = c.cycle_len;
    if (c.tag == findyn::CaseTag::FiniteFigure9) {
        j["tail_len"] = c.tail_len;
        if (c.start) j["start"] = *c.start;
    }
    j["trans"] = pointset_to_json(c.trans);
    j["image_dense"] = c.image_dense;
    return j;
}

json theorem_results_to_json(const std::vector<harness::TheoremResult>& results) {
    json arr = json::array();
    for (const auto& r : results) {
        json v = json::array();
        for (const auto& viol : r.violations)
            v.push_back({{"system", viol.system_id}, {"witness", viol.witness}});
        arr.push_back({{"id", r.id},
                       {"anchor", r.anchor},
                       {"checked", r.checked},
                       {"vacuous", r.vacuous},
                       {"violations", v}});
    }
    return arr;
}

static std::string set_with_labels(const findyn::FinSystem& sys, const PointSet& s) {
    std::string out = "{";
    bool sep = false;
    for (auto i : s.indices()) {
        if (sep) out += ",";
        out += sys.label(i);
        sep = true;
    }
    return out + "}";
}

std::string render_report_text(const findyn::FinSystem& sys, const PropertyReport& r) {
    std::ostringstream os;
    auto line = [&](const char* name, bool holds) {
        os << "  " << name << ": " << (holds ? "true" : "false") << "\n";
    };
    os << "properties (" << sys.n() << " points)\n";
    line("IN  ", r.in);
    line("TT  ", r.tt);
    line("TT+ ", r.tt_plus);
    line("TT++", r.tt_plusplus);
    line("DO  ", r.do_);
    line("DO+ ", r.do_plus);
    line("DO++", r.do_plusplus);
    os << "  Trans: " << set_with_labels(sys, r.trans) << "\n";
    os << "  Iso:   " << set_with_labels(sys, r.iso) << "\n";
    if (r.tt_refuted)
        os << "  TT refuted by pair (" << sys.label(r.tt_refuted->u) << ","
           << sys.label(r.tt_refuted->v) << "): N+ " << r.tt_refuted->n_uv.to_string()
           << " / " << r.tt_refuted->n_vu.to_string() << "\n";
    if (r.ttp_refuted && !r.tt_refuted)
        os << "  TT+ refuted by pair (" << sys.label(r.ttp_refuted->u) << ","
           << sys.label(r.ttp_refuted->v) << "): N+ " << r.ttp_refuted->n_uv.to_string()
           << "\n";
    if (r.ttpp_refuted && !r.ttp_refuted)
        os << "  TT++ refuted by pair (" << sys.label(r.ttpp_refuted->u) << ","
           << sys.label(r.ttpp_refuted->v) << "): N+ " << r.ttpp_refuted->n_uv.to_string()
           << "\n";
    if (r.do_witness)
        os << "  DO witness: " << (r.do_witness->half_infinite ? "half-infinite from "
                                                               : "bi-infinite around ")
           << sys.label(r.do_witness->start) << ", elements "
           << set_with_labels(sys, r.do_witness->elements) << "\n";
    if (r.dop_point) os << "  DO+ witness point: " << sys.label(*r.dop_point) << "\n";
    if (r.dopp_point) os << "  DO++ witness point: " << sys.label(*r.dopp_point) << "\n";
    return os.str();
}

std::string render_classification_text(const findyn::FinSystem& sys,
                                       const findyn::Classification& c) {
    std::ostringstream os;
    os << "case: " << findyn::to_string(c.tag) << "\n";
    os << "  cycle length: " << c.cycle_len << "\n";
    if (c.tag == findyn::CaseTag::FiniteFigure9) {
        os << "  tail length:  " << c.tail_len << "\n";
        if (c.start) os << "  start:        " << sys.label(*c.start) << "\n";
    }
    os << "  Trans: " << set_with_labels(sys, c.trans) << "\n";
    os << "  image dense: " << (c.image_dense ? "true" : "false") << "\n";
    return os.str();
}

}  // namespace topdyn::io
