#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "loewner/errors.hpp"
#include "loewner/stieltjes.hpp"

namespace loewner {

namespace {

using nlohmann::json;

double number_field(const json& obj, const std::string& key) {
    if (!obj.contains(key)) fail(Errc::invalid_argument, "missing field '" + key + "'");
    const json& v = obj.at(key);
    if (!v.is_number()) fail(Errc::invalid_argument, "field '" + key + "' must be a number");
    return v.get<double>();
}

void reject_unknown_fields(const json& obj, const std::set<std::string>& allowed,
                           const std::string& where) {
    for (const auto& item : obj.items())
        if (!allowed.contains(item.key()))
            fail(Errc::invalid_argument, "unknown field '" + item.key() + "' in " + where);
}

AtomicMeasure parse_measure(const json& root, int n) {
    if (!root.contains("atoms") || !root.at("atoms").is_array())
        fail(Errc::invalid_argument, "'atoms' must be an array");
    std::vector<Atom> atoms;
    for (const json& a : root.at("atoms")) {
        if (!a.is_object()) fail(Errc::invalid_argument, "atom must be an object");
        reject_unknown_fields(a, {"xi", "w"}, "atom");
        if (!a.contains("xi") || !a.at("xi").is_array())
            fail(Errc::invalid_argument, "atom 'xi' must be an array");
        Atom atom;
        for (const json& c : a.at("xi")) {
            if (!c.is_number())
                fail(Errc::invalid_argument, "atom coordinates must be numbers");
            atom.xi.push_back(c.get<double>());
        }
        if (static_cast<int>(atom.xi.size()) != n)
            fail(Errc::invalid_argument, "atom 'xi' length does not match n");
        atom.w = number_field(a, "w");
        atoms.push_back(std::move(atom));
    }
    return AtomicMeasure(n, std::move(atoms));
}

int arity_field(const json& root) {
    const double n_raw = number_field(root, "n");
    const int n = static_cast<int>(n_raw);
    if (n_raw != n || n < 1) fail(Errc::invalid_argument, "'n' must be a positive integer");
    return n;
}

} // namespace

StieltjesFunction parse_function_json(const std::string& text) {
    json root = json::parse(text, nullptr, false);
    if (root.is_discarded()) fail(Errc::invalid_argument, "malformed JSON");
    if (!root.is_object()) fail(Errc::invalid_argument, "definition must be a JSON object");
    if (!root.contains("kind") || !root.at("kind").is_string())
        fail(Errc::invalid_argument, "missing string field 'kind'");
    const std::string kind = root.at("kind").get<std::string>();

    if (kind == "qalpha") {
        reject_unknown_fields(root, {"kind", "n", "alpha", "gamma", "atoms"}, "qalpha definition");
        const int n = arity_field(root);
        return make_qalpha(number_field(root, "alpha"), number_field(root, "gamma"),
                           parse_measure(root, n));
    }
    if (kind == "rminus") {
        reject_unknown_fields(root, {"kind", "n", "lambda", "gamma", "atoms"},
                              "rminus definition");
        const int n = arity_field(root);
        return make_rminus(number_field(root, "lambda"), number_field(root, "gamma"),
                           parse_measure(root, n));
    }
    fail(Errc::invalid_argument, "unknown kind '" + kind + "'");
}

StieltjesFunction load_function_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::invalid_argument, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_function_json(buf.str());
}

namespace {

json measure_to_json(const AtomicMeasure& m) {
    json atoms = json::array();
    for (const auto& a : m.atoms()) atoms.push_back(json{{"xi", a.xi}, {"w", a.w}});
    return atoms;
}

} // namespace

std::string function_to_json(const StieltjesFunction& f) {
    json root;
    if (const auto* q = std::get_if<QAlphaFunction>(&f)) {
        root = json{{"kind", "qalpha"},
                    {"n", q->measure.arity()},
                    {"alpha", q->alpha},
                    {"gamma", q->gamma},
                    {"atoms", measure_to_json(q->measure)}};
    } else {
        const auto& r = std::get<RMinusFunction>(f);
        root = json{{"kind", "rminus"},
                    {"n", r.measure.arity()},
                    {"lambda", r.lambda},
                    {"gamma", r.gamma},
                    {"atoms", measure_to_json(r.measure)}};
    }
    return root.dump();
}

} // namespace loewner
