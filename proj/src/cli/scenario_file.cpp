#include "stackgame/cli/scenario_file.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace stackgame::cli {

using nlohmann::json;

namespace {

std::string join(const std::string& parent, const std::string& key) {
    return parent.empty() ? key : parent + "." + key;
}

// Walks one JSON object, remembering which keys were read so anything left
// over can be rejected as unknown.
class ObjectReader {
public:
    ObjectReader(const json& node, std::string path) : node_(node), path_(std::move(path)) {
        if (!node_.is_object()) {
            throw ScenarioError(path_, "expected an object");
        }
    }

    const std::string& path() const { return path_; }

    bool has(const std::string& key) const { return node_.contains(key); }

    const json& child(const std::string& key) {
        if (!node_.contains(key)) {
            throw ScenarioError(join(path_, key), "missing required key");
        }
        seen_.insert(key);
        return node_.at(key);
    }

    double number(const std::string& key) {
        const json& v = child(key);
        if (!v.is_number()) {
            throw ScenarioError(join(path_, key), "expected a number");
        }
        const double d = v.get<double>();
        if (!std::isfinite(d)) {
            throw ScenarioError(join(path_, key), "must be finite");
        }
        return d;
    }

    double non_negative(const std::string& key) {
        const double d = number(key);
        if (d < 0.0) {
            throw ScenarioError(join(path_, key), "must be >= 0");
        }
        return d;
    }

    double positive(const std::string& key) {
        const double d = number(key);
        if (d <= 0.0) {
            throw ScenarioError(join(path_, key), "must be > 0");
        }
        return d;
    }

    std::size_t count(const std::string& key) {
        const json& v = child(key);
        if (!v.is_number_integer() || v.get<long long>() < 1) {
            throw ScenarioError(join(path_, key), "expected an integer >= 1");
        }
        return v.get<std::size_t>();
    }

    std::string string(const std::string& key) {
        const json& v = child(key);
        if (!v.is_string()) {
            throw ScenarioError(join(path_, key), "expected a string");
        }
        return v.get<std::string>();
    }

    ObjectReader object(const std::string& key) { return ObjectReader{child(key), join(path_, key)}; }

    // Objects like {"simplex": {...}} must hold exactly one of `choices`.
    std::string only_key(std::initializer_list<const char*> choices) {
        if (node_.size() != 1) {
            throw ScenarioError(path_, "expected exactly one key");
        }
        const std::string key = node_.begin().key();
        for (const char* c : choices) {
            if (key == c) return key;
        }
        throw ScenarioError(join(path_, key), "unknown key");
    }

    void finish() const {
        for (const auto& [key, value] : node_.items()) {
            if (!seen_.contains(key)) {
                throw ScenarioError(join(path_, key), "unknown key");
            }
        }
    }

private:
    const json& node_;
    std::string path_;
    std::set<std::string> seen_;
};

UtilityModel parse_model(ObjectReader& r) {
    const std::string m = r.string("model");
    if (m == "linear") return UtilityModel::Linear;
    if (m == "nonlinear") return UtilityModel::Nonlinear;
    throw ScenarioError(join(r.path(), "model"), "expected \"linear\" or \"nonlinear\"");
}

EngagementProfile parse_profile(ObjectReader r) {
    EngagementProfile p{r.non_negative("clicks"), r.non_negative("watch_time"),
                        r.non_negative("shares"), r.non_negative("drama_risk")};
    r.finish();
    return p;
}

GameTable parse_table(ObjectReader r) {
    auto collab = parse_profile(r.object("collaboration"));
    auto beef = parse_profile(r.object("beefing"));
    r.finish();
    return GameTable{collab, beef};
}

ResponseRule parse_rule(const json& node, const std::string& path) {
    if (node.is_string()) {
        if (node.get<std::string>() == "exact") return ResponseRule::exact();
        throw ScenarioError(path, "expected \"exact\" or a rule object");
    }
    ObjectReader r{node, path};
    const std::string kind = r.only_key({"exact", "quantal", "satisficing"});
    if (kind == "exact") {
        r.object("exact").finish();
        return ResponseRule::exact();
    }
    auto params = r.object(kind);
    ResponseRule rule = kind == "quantal" ? ResponseRule::quantal(params.non_negative("lambda"))
                                          : ResponseRule::satisficing(params.number("aspiration"));
    params.finish();
    return rule;
}

Population parse_population(ObjectReader r, UtilityModel model) {
    const std::string kind = r.only_key({"deltas", "grid"});
    if (kind == "deltas") {
        const json& list = r.child("deltas");
        const std::string path = join(r.path(), "deltas");
        if (!list.is_array() || list.empty()) {
            throw ScenarioError(path, "expected a non-empty array");
        }
        std::vector<CreatorParams> members;
        for (std::size_t i = 0; i < list.size(); ++i) {
            const std::string item = path + "[" + std::to_string(i) + "]";
            if (!list[i].is_number()) throw ScenarioError(item, "expected a number");
            const double d = list[i].get<double>();
            if (!std::isfinite(d) || d < 0.0) throw ScenarioError(item, "must be finite and >= 0");
            members.emplace_back(d, model);
        }
        return Population{std::move(members)};
    }
    auto grid = r.object("grid");
    const double lo = grid.non_negative("min");
    const double hi = grid.non_negative("max");
    const std::size_t n = grid.count("count");
    grid.finish();
    if (lo > hi) {
        throw ScenarioError(join(grid.path(), "max"), "must be >= min");
    }
    return make_delta_grid_population(lo, hi, n, model);
}

WeightDomain parse_domain(ObjectReader r) {
    const std::string kind = r.only_key({"simplex", "box"});
    auto d = r.object(kind);
    WeightDomain domain = kind == "simplex"
        ? WeightDomain::simplex(d.positive("total"), d.count("resolution"))
        : WeightDomain::box(d.positive("alpha_max"), d.positive("beta_max"),
                            d.positive("gamma_max"), d.count("resolution"));
    d.finish();
    return domain;
}

json profile_json(const EngagementProfile& p) {
    return {{"clicks", p.clicks()},
            {"watch_time", p.watch_time()},
            {"shares", p.shares()},
            {"drama_risk", p.drama_risk()}};
}

}  // namespace

ScenarioFile parse_scenario(const json& doc) {
    ObjectReader root{doc, ""};

    GameTable table = root.has("table") ? parse_table(root.object("table")) : default_table();

    auto w = root.object("weights");
    AlgorithmWeights weights{w.non_negative("alpha"), w.non_negative("beta"),
                             w.non_negative("gamma")};
    w.finish();

    auto c = root.object("creator");
    const double delta = c.non_negative("delta");
    CreatorParams creator{delta, parse_model(c)};
    c.finish();

    ResponseRule rule = root.has("rule") ? parse_rule(root.child("rule"), "rule")
                                         : ResponseRule::exact();

    std::optional<Population> population;
    if (root.has("population")) {
        population = parse_population(root.object("population"), creator.model());
    }

    WeightDomain domain = root.has("domain") ? parse_domain(root.object("domain"))
                                             : WeightDomain::default_domain();
    root.finish();

    return ScenarioFile{
        .scenario = Scenario{weights, creator, table, rule},
        .population = std::move(population),
        .domain = domain,
    };
}

ScenarioFile parse_scenario_text(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ScenarioError("", std::string("malformed JSON: ") + e.what());
    }
    return parse_scenario(doc);
}

ScenarioFile load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ScenarioIoError("cannot read scenario file " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario_text(buf.str());
}

json to_json(const ScenarioFile& file) {
    const auto& s = file.scenario;
    json doc;
    doc["table"] = {{"collaboration", profile_json(s.table.at(Strategy::Collaboration))},
                    {"beefing", profile_json(s.table.at(Strategy::Beefing))}};
    doc["weights"] = {{"alpha", s.weights.alpha()},
                      {"beta", s.weights.beta()},
                      {"gamma", s.weights.gamma()}};
    doc["creator"] = {{"delta", s.creator.delta()},
                      {"model", std::string(to_string(s.creator.model()))}};

    std::visit(
        [&](const auto& k) {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, ResponseRule::Exact>) {
                doc["rule"] = "exact";
            } else if constexpr (std::is_same_v<K, ResponseRule::Quantal>) {
                doc["rule"] = {{"quantal", {{"lambda", k.lambda}}}};
            } else {
                doc["rule"] = {{"satisficing", {{"aspiration", k.aspiration}}}};
            }
        },
        s.rule.kind());

    if (file.population) {
        json deltas = json::array();
        for (const auto& m : file.population->members()) deltas.push_back(m.delta());
        doc["population"] = {{"deltas", deltas}};
    }

    const auto resolution = file.domain.resolution();
    if (const auto* sx = std::get_if<WeightDomain::Simplex>(&file.domain.kind())) {
        doc["domain"] = {{"simplex", {{"total", sx->total}, {"resolution", resolution}}}};
    } else {
        const auto& b = std::get<WeightDomain::Box>(file.domain.kind());
        doc["domain"] = {{"box",
                          {{"alpha_max", b.alpha_max},
                           {"beta_max", b.beta_max},
                           {"gamma_max", b.gamma_max},
                           {"resolution", resolution}}}};
    }
    return doc;
}

}  // namespace stackgame::cli
