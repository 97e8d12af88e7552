#include "engine/io.hpp"

#include <fstream>

#include "engine/error.hpp"
#include "engine/scenarios.hpp"
#include "engine/word.hpp"

namespace conic {

namespace {

const Json& need(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) throw InputError(where + ": expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw InputError(where + ": missing field '" + key + "'");
    return *it;
}

long need_int(const Json& j, const char* key, const std::string& where) {
    const Json& v = need(j, key, where);
    if (!v.is_number_integer())
        throw InputError(where + ": field '" + key + "' must be an integer");
    return v.get<long>();
}

std::string need_str(const Json& j, const char* key, const std::string& where) {
    const Json& v = need(j, key, where);
    if (!v.is_string()) throw InputError(where + ": field '" + key + "' must be a string");
    return v.get<std::string>();
}

Matrix matrix_from_json(const Json& j, const std::string& where) {
    if (!j.is_array() || j.empty())
        throw InputError(where + ": a matrix is a nonempty array of rows");
    if (!j[0].is_array() || j[0].empty())
        throw InputError(where + ": a matrix row is a nonempty array of rational strings");
    const std::size_t rows = j.size(), cols = j[0].size();
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols)
            throw InputError(where + ": ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) {
            if (!j[r][c].is_string())
                throw InputError(where + ": matrix entries are rational strings");
            m.at(r, c) = parse_rational(j[r][c].get<std::string>());
        }
    }
    return m;
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rat_str(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

SpaceDoc space_from_json(const Json& j) {
    const std::string where = "space file";
    std::string name = need_str(j, "name", where);

    const Json& gens = need(j, "generators", where);
    if (!gens.is_array() || gens.empty())
        throw InputError(where + ": 'generators' must be a nonempty array");
    std::vector<std::string> names;
    for (const Json& g : gens) {
        if (!g.is_string()) throw InputError(where + ": generator names must be strings");
        names.push_back(g.get<std::string>());
    }
    const std::size_t dim = names.size();

    long cutoff = need_int(j, "cutoff", where);
    if (cutoff < 0) throw InputError(where + ": cutoff must be nonnegative");

    std::vector<Relation> rels;
    if (auto it = j.find("relations"); it != j.end()) {
        if (!it->is_array()) throw InputError(where + ": 'relations' must be an array");
        for (const Json& rj : *it) {
            Relation rel;
            long degree = need_int(rj, "degree", where);
            if (degree < 2) throw InputError(where + ": relation degree must be at least 2");
            if (degree > cutoff) throw InputError(where + ": relation degree exceeds the cutoff");
            rel.degree = static_cast<int>(degree);
            const Json& terms = need(rj, "terms", where);
            if (!terms.is_array() || terms.empty())
                throw InputError(where + ": relation 'terms' must be a nonempty array");
            for (const Json& tj : terms) {
                const Json& wj = need(tj, "word", where);
                if (!wj.is_array() || wj.size() != static_cast<std::size_t>(degree))
                    throw InputError(where + ": word length must equal the relation degree");
                Word w;
                for (const Json& letter : wj) {
                    if (!letter.is_number_integer())
                        throw InputError(where + ": word letters must be integers");
                    long v = letter.get<long>();
                    if (v < 0 || v >= static_cast<long>(dim))
                        throw InputError(where + ": word letter out of range");
                    w.push_back(static_cast<int>(v));
                }
                Rational coef = parse_rational(need_str(tj, "coef", where));
                if (coef == 0) throw InputError(where + ": zero coefficient in a relation");
                if (!rel.terms.emplace(std::move(w), coef).second)
                    throw InputError(where + ": duplicate word within a relation");
            }
            rels.push_back(std::move(rel));
        }
    }

    QuantumSpace qs = make_space(std::move(names),
                                 ideal_from_relations(rels, dim, static_cast<int>(cutoff)),
                                 static_cast<int>(cutoff));
    return SpaceDoc{std::move(name), std::move(qs)};
}

Json space_to_json(const SpaceDoc& doc) {
    const QuantumSpace& qs = doc.space;
    Json j;
    j["name"] = doc.name;
    j["generators"] = qs.generators;
    j["cutoff"] = qs.cutoff;
    Json rels = Json::array();
    for (int n = 2; n <= qs.cutoff; ++n) {
        const Matrix& basis = qs.ideal.component(n).basis();
        for (std::size_t r = 0; r < basis.rows(); ++r) {
            Json terms = Json::array();
            for (std::size_t c = 0; c < basis.cols(); ++c) {
                if (basis.at(r, c) == 0) continue;
                Json term;
                term["word"] = word_from_index(c, n, qs.dim());
                term["coef"] = rat_str(basis.at(r, c));
                terms.push_back(std::move(term));
            }
            Json rel;
            rel["degree"] = n;
            rel["terms"] = std::move(terms);
            rels.push_back(std::move(rel));
        }
    }
    j["relations"] = std::move(rels);
    return j;
}

Cochain cochain_from_json(const Json& j) {
    const std::string where = "cochain file";
    std::string kind = need_str(j, "kind", where);

    if (kind == "bicharacter" || kind == "antibicharacter" || kind == "diagonal") {
        long dim = need_int(j, "dim", where);
        long cutoff = need_int(j, "cutoff", where);
        if (dim < 1) throw InputError(where + ": dim must be positive");
        if (cutoff < 0) throw InputError(where + ": cutoff must be nonnegative");
        if (kind == "diagonal") {
            Rational q = parse_rational(need_str(j, "q", where));
            const Json& wj = need(j, "weights", where);
            if (!wj.is_array() || wj.size() != static_cast<std::size_t>(dim))
                throw InputError(where + ": 'weights' must be a dim x dim integer matrix");
            std::vector<std::vector<long>> weights;
            for (const Json& row : wj) {
                if (!row.is_array() || row.size() != static_cast<std::size_t>(dim))
                    throw InputError(where + ": 'weights' must be a dim x dim integer matrix");
                std::vector<long> w;
                for (const Json& e : row) {
                    if (!e.is_number_integer())
                        throw InputError(where + ": weights must be integers");
                    w.push_back(e.get<long>());
                }
                weights.push_back(std::move(w));
            }
            return build_psi_q(weights, q, static_cast<std::size_t>(dim),
                               static_cast<int>(cutoff));
        }
        Matrix seed = matrix_from_json(need(j, "seed", where), where);
        const std::size_t d2 = static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim);
        if (seed.rows() != d2 || seed.cols() != d2)
            throw InputError(where + ": seed must be dim^2 x dim^2");
        try {
            return extend_seed(seed, kind == "antibicharacter", static_cast<int>(cutoff));
        } catch (const PropertyError& e) {
            throw InputError(where + ": " + e.what());
        }
    }

    if (kind == "explicit") {
        long level = need_int(j, "level", where);
        long dim = need_int(j, "dim", where);
        long cutoff = need_int(j, "cutoff", where);
        if (level < 0) throw InputError(where + ": level must be nonnegative");
        if (dim < 1) throw InputError(where + ": dim must be positive");
        if (cutoff < 0) throw InputError(where + ": cutoff must be nonnegative");
        const Json& bj = need(j, "blocks", where);
        if (!bj.is_array()) throw InputError(where + ": 'blocks' must be an array");
        std::map<MultiIndex, Matrix> blocks;
        for (const Json& entry : bj) {
            const Json& ij = need(entry, "index", where);
            if (!ij.is_array() || ij.size() != static_cast<std::size_t>(level))
                throw InputError(where + ": block index length must equal the level");
            MultiIndex r;
            for (const Json& e : ij) {
                if (!e.is_number_integer() || e.get<long>() < 0)
                    throw InputError(where + ": block indices are nonnegative integers");
                r.push_back(static_cast<int>(e.get<long>()));
            }
            Matrix m = matrix_from_json(need(entry, "matrix", where), where);
            if (!blocks.emplace(std::move(r), std::move(m)).second)
                throw InputError(where + ": duplicate block index");
        }
        try {
            return Cochain::from_blocks(static_cast<int>(level), static_cast<std::size_t>(dim),
                                        static_cast<int>(cutoff), std::move(blocks));
        } catch (const PropertyError& e) {
            throw InputError(where + ": " + e.what());
        }
    }

    if (kind == "primitive") {
        long dim = need_int(j, "dim", where);
        long cutoff = need_int(j, "cutoff", where);
        if (dim < 1) throw InputError(where + ": dim must be positive");
        if (cutoff < 0) throw InputError(where + ": cutoff must be nonnegative");
        const Json& tj = need(j, "theta", where);
        if (!tj.is_array() || tj.size() != static_cast<std::size_t>(cutoff) + 1)
            throw InputError(where + ": 'theta' must list one block per degree 0..cutoff");
        std::map<MultiIndex, Matrix> blocks;
        for (long r = 0; r <= cutoff; ++r)
            blocks.emplace(MultiIndex{static_cast<int>(r)},
                           matrix_from_json(tj[static_cast<std::size_t>(r)], where));
        try {
            return Cochain::from_blocks(1, static_cast<std::size_t>(dim),
                                        static_cast<int>(cutoff), std::move(blocks));
        } catch (const PropertyError& e) {
            throw InputError(where + ": " + e.what());
        }
    }

    throw InputError(where + ": unknown kind '" + kind + "'");
}

Json cochain_to_json(const Cochain& psi) {
    Json j;
    j["kind"] = "explicit";
    j["level"] = psi.level();
    j["dim"] = psi.dim();
    j["cutoff"] = psi.cutoff();
    Json blocks = Json::array();
    for (const auto& [r, m] : psi.blocks()) {
        Json entry;
        entry["index"] = r;
        entry["matrix"] = matrix_to_json(m);
        blocks.push_back(std::move(entry));
    }
    j["blocks"] = std::move(blocks);
    return j;
}

Json report_to_json(const ScenarioReport& rep) {
    Json j;
    j["name"] = rep.name;
    Json params = Json::object();
    for (const auto& [k, v] : rep.parameters) params[k] = v;
    j["parameters"] = std::move(params);
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
        Json cj;
        cj["label"] = c.label;
        cj["pass"] = c.pass;
        cj["detail"] = c.detail;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    j["passed"] = rep.passed();
    return j;
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

void save_json(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << j.dump(2) << '\n';
}

SpaceDoc load_space(const std::string& path) { return space_from_json(load_json(path)); }

void save_space(const std::string& path, const SpaceDoc& doc) {
    save_json(path, space_to_json(doc));
}

Cochain load_cochain(const std::string& path) { return cochain_from_json(load_json(path)); }

void save_cochain(const std::string& path, const Cochain& psi) {
    save_json(path, cochain_to_json(psi));
}

QuantumSpace truncate_space(const QuantumSpace& qs, int cutoff) {
    if (cutoff > qs.cutoff)
        throw InputError("cutoff may lower but not raise a file's cutoff");
    if (cutoff == qs.cutoff) return qs;
    std::vector<Subspace> comp;
    for (int n = 0; n <= cutoff; ++n) comp.push_back(qs.ideal.component(n));
    return make_space(qs.generators, GradedIdeal(std::move(comp), qs.dim(), Provenance::direct),
                      cutoff);
}

Cochain truncate_cochain(const Cochain& psi, int cutoff) {
    if (cutoff > psi.cutoff())
        throw InputError("cutoff may lower but not raise a file's cutoff");
    if (cutoff == psi.cutoff()) return psi;
    std::map<MultiIndex, Matrix> keep;
    for (const auto& [r, m] : psi.blocks()) {
        long total = 0;
        for (int e : r) total += e;
        if (total <= cutoff) keep.emplace(r, m);
    }
    return Cochain::from_blocks(psi.level(), psi.dim(), cutoff, std::move(keep));
}

}  // namespace conic
