#include "tenfold/modelfile.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace tenfold {

namespace {

std::string trim(const std::string& s) {
    size_t a = 0;
    size_t b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::string strip_quotes(const std::string& s) {
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') return s.substr(1, s.size() - 2);
    return s;
}

struct TrigFactor {
    bool is_sin = false;
    int axis = 0;
};

// One additive term: sign * (literal or param) * trig factors * pauli matrix.
struct Term {
    double literal = 1.0;
    std::string param; // empty means literal only
    std::vector<TrigFactor> trig;
    CMatrix matrix;
    bool has_matrix = false;
};

int parse_axis(const std::string& name, const std::string& origin) {
    if (name == "k1" || name == "kx") return 0;
    if (name == "k2" || name == "ky") return 1;
    if (name == "k3" || name == "kz") return 2;
    throw Error(ErrorCode::BadModelFile, origin + ": unknown momentum axis '" + name + "'");
}

bool looks_numeric(const std::string& s) {
    char* end = nullptr;
    std::strtod(s.c_str(), &end);
    return end != nullptr && *end == '\0' && end != s.c_str();
}

Term parse_term(const std::string& text, const std::string& origin) {
    Term term;
    std::vector<std::string> factors;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t next = text.find('*', pos);
        factors.push_back(trim(text.substr(pos, next == std::string::npos ? next : next - pos)));
        if (next == std::string::npos) break;
        pos = next + 1;
    }

    // re-join pauli:x*y fragments split by the '*' tokenizer
    std::vector<std::string> merged;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].rfind("pauli:", 0) == 0) {
            std::string p = factors[i];
            while (i + 1 < factors.size() && factors[i + 1].size() == 1 &&
                   std::string("0xyz123").find(factors[i + 1]) != std::string::npos) {
                p += "*" + factors[++i];
            }
            merged.push_back(p);
        } else {
            merged.push_back(factors[i]);
        }
    }

    for (std::string f : merged) {
        if (f.empty()) throw Error(ErrorCode::BadModelFile, origin + ": empty factor in term");
        double sign = 1.0;
        if (f[0] == '-' && f.size() > 1 && !looks_numeric(f)) {
            sign = -1.0;
            f = trim(f.substr(1));
        }
        term.literal *= sign;
        if (f.rfind("pauli:", 0) == 0) {
            if (term.has_matrix)
                throw Error(ErrorCode::BadModelFile, origin + ": more than one pauli factor in a term");
            term.matrix = pauli_string(f.substr(6));
            term.has_matrix = true;
        } else if (f.rfind("sin(", 0) == 0 && f.back() == ')') {
            term.trig.push_back({true, parse_axis(trim(f.substr(4, f.size() - 5)), origin)});
        } else if (f.rfind("cos(", 0) == 0 && f.back() == ')') {
            term.trig.push_back({false, parse_axis(trim(f.substr(4, f.size() - 5)), origin)});
        } else if (looks_numeric(f)) {
            term.literal *= std::strtod(f.c_str(), nullptr);
        } else {
            if (!term.param.empty())
                throw Error(ErrorCode::BadModelFile,
                            origin + ": more than one parameter factor '" + f + "' in a term");
            term.param = f;
        }
    }
    return term;
}

} // namespace

BlochModel parse_model_stream(std::istream& in, const std::string& origin,
                              const ModelParams& overrides) {
    std::string section;
    std::map<std::string, std::map<std::string, std::string>> kv;
    std::vector<std::string> term_lines;

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        if (t.front() == '[' && t.back() == ']') {
            section = trim(t.substr(1, t.size() - 2));
            continue;
        }
        const size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorCode::BadModelFile,
                        origin + ":" + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(t.substr(0, eq));
        const std::string value = strip_quotes(trim(t.substr(eq + 1)));
        if (section == "terms" && key == "term") term_lines.push_back(value);
        else kv[section][key] = value;
    }

    const auto& model_kv = kv["model"];
    if (!model_kv.count("name"))
        throw Error(ErrorCode::BadModelFile, origin + ": missing [model] name");
    const std::string name = model_kv.at("name");

    ModelParams params;
    for (const auto& [key, value] : kv["params"]) {
        if (!looks_numeric(value))
            throw Error(ErrorCode::BadModelFile, origin + ": parameter '" + key + "' is not a number");
        params.set(key, std::strtod(value.c_str(), nullptr));
    }
    for (const auto& [key, value] : overrides.values) params.set(key, value);

    BlochModel model;
    if (term_lines.empty()) {
        model = make_model(name, params);
    } else {
        if (!model_kv.count("dim"))
            throw Error(ErrorCode::BadModelFile, origin + ": custom model needs [model] dim");
        const int dim = std::atoi(model_kv.at("dim").c_str());
        if (dim < 1 || dim > 3)
            throw Error(ErrorCode::BadModelFile, origin + ": dim must be 1..3");

        std::vector<Term> terms;
        int bands = 0;
        for (const std::string& tl : term_lines) {
            Term term = parse_term(tl, origin);
            if (!term.has_matrix)
                throw Error(ErrorCode::BadModelFile, origin + ": term '" + tl + "' has no pauli factor");
            for (const TrigFactor& tf : term.trig)
                if (tf.axis >= dim)
                    throw Error(ErrorCode::BadModelFile,
                                origin + ": term '" + tl + "' uses an axis beyond dim");
            if (bands == 0) bands = term.matrix.rows();
            else if (bands != term.matrix.rows())
                throw Error(ErrorCode::BadModelFile, origin + ": terms have mixed matrix sizes");
            if (!term.param.empty() && !params.has(term.param))
                throw Error(ErrorCode::MissingParam,
                            origin + ": parameter '" + term.param + "' is not defined in [params]");
            terms.push_back(std::move(term));
        }
        if (model_kv.count("bands") && std::atoi(model_kv.at("bands").c_str()) != bands)
            throw Error(ErrorCode::BadModelFile, origin + ": [model] bands does not match the terms");

        model.name = name;
        model.dim = dim;
        model.bands = bands;
        model.eval = [terms, params, bands](const MomentumPoint& k) {
            CMatrix h(bands);
            for (const Term& term : terms) {
                double coeff = term.literal;
                if (!term.param.empty()) coeff *= params.get(term.param);
                for (const TrigFactor& tf : term.trig)
                    coeff *= tf.is_sin ? std::sin(k[tf.axis]) : std::cos(k[tf.axis]);
                h += coeff * term.matrix;
            }
            return h;
        };
    }
    model.params = params;

    // [symmetry.trs] / [symmetry.phs] / [symmetry.chiral]: u = pauli:... entries
    for (const auto& [section_name, entries] : kv) {
        if (section_name.rfind("symmetry.", 0) != 0) continue;
        const std::string kind = section_name.substr(9);
        if (!entries.count("u"))
            throw Error(ErrorCode::BadModelFile, origin + ": [" + section_name + "] needs u = ...");
        std::string uspec = entries.at("u");
        if (uspec.rfind("pauli:", 0) != 0)
            throw Error(ErrorCode::BadModelFile, origin + ": operator must be a pauli: string");
        const CMatrix u = pauli_string(uspec.substr(6));
        if (u.rows() != model.bands)
            throw Error(ErrorCode::BadModelFile, origin + ": operator size does not match the model");
        bool antiunitary = kind != "chiral";
        if (entries.count("antiunitary"))
            antiunitary = entries.at("antiunitary") == "true";
        if (kind == "trs" || kind == "phs") {
            if (!antiunitary)
                throw Error(ErrorCode::BadModelFile, origin + ": trs/phs operators are anti-unitary");
            model.default_candidates.antiunitary.push_back(
                {u, kind == "trs" ? OpKind::TRS : OpKind::PHS, uspec + " K"});
        } else if (kind == "chiral") {
            model.default_candidates.chiral.push_back({u, uspec});
        } else {
            throw Error(ErrorCode::BadModelFile, origin + ": unknown symmetry section '" + kind + "'");
        }
    }

    model.validate();
    return model;
}

BlochModel load_model_file(const std::string& path, const ModelParams& overrides) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::FileNotFound, "cannot open model file '" + path + "'");
    return parse_model_stream(in, path, overrides);
}

} // namespace tenfold
