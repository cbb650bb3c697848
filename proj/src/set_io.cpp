#include "upbkit/set_io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace upbkit {

namespace {

void append_double(std::string& out, double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    out += buf;
}

}  // namespace

std::string set_to_json(const ProductVectorSet& set) {
    std::string out = "{\"dims\":[";
    for (int m = 0; m < set.shape().sites(); ++m) {
        if (m) out += ",";
        out += std::to_string(set.shape().dim(m));
    }
    out += "],\"vectors\":[";
    for (int i = 0; i < set.size(); ++i) {
        if (i) out += ",";
        out += "[";
        const ProductVector& v = set.vector(i);
        for (int m = 0; m < v.sites(); ++m) {
            if (m) out += ",";
            out += "[";
            const CVec& f = v.factor(m);
            for (int a = 0; a < f.dim(); ++a) {
                if (a) out += ",";
                out += "[";
                append_double(out, f[a].real());
                out += ",";
                append_double(out, f[a].imag());
                out += "]";
            }
            out += "]";
        }
        out += "]";
    }
    out += "]}\n";
    return out;
}

ProductVectorSet set_from_json(const std::string& text, const Tolerance& tol) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SetFormatError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("dims") || !j.contains("vectors"))
        throw SetFormatError("expected an object with \"dims\" and \"vectors\"");
    const auto& jd = j["dims"];
    if (!jd.is_array() || jd.size() < 2)
        throw SetFormatError("\"dims\" must be an array of at least 2 integers");
    std::vector<int> dims;
    for (std::size_t m = 0; m < jd.size(); ++m) {
        if (!jd[m].is_number_integer() || jd[m].get<long long>() < 2)
            throw SetFormatError("\"dims\"[" + std::to_string(m) + "] must be an integer >= 2");
        dims.push_back(jd[m].get<int>());
    }
    const auto& jv = j["vectors"];
    if (!jv.is_array()) throw SetFormatError("\"vectors\" must be an array");
    std::vector<ProductVector> vectors;
    for (std::size_t i = 0; i < jv.size(); ++i) {
        const std::string at = "\"vectors\"[" + std::to_string(i) + "]";
        if (!jv[i].is_array() || jv[i].size() != dims.size())
            throw SetFormatError(at + " must list one factor per site");
        std::vector<CVec> factors;
        for (std::size_t m = 0; m < dims.size(); ++m) {
            const auto& jf = jv[i][m];
            const std::string fat = at + "[" + std::to_string(m) + "]";
            if (!jf.is_array() || static_cast<int>(jf.size()) != dims[m])
                throw SetFormatError(fat + " must have " + std::to_string(dims[m]) +
                                     " amplitudes");
            Eigen::VectorXcd f(dims[m]);
            for (int a = 0; a < dims[m]; ++a) {
                const auto& ja = jf[static_cast<std::size_t>(a)];
                if (!ja.is_array() || ja.size() != 2 || !ja[0].is_number() || !ja[1].is_number())
                    throw SetFormatError(fat + "[" + std::to_string(a) +
                                         "] must be a [re,im] pair");
                f(a) = Complex(ja[0].get<double>(), ja[1].get<double>());
            }
            try {
                // Keep already-normalized amplitudes exact so that read and
                // write round-trip byte for byte.
                if (std::abs(f.norm() - 1.0) <= 1e-12)
                    factors.push_back(CVec::from_unit(std::move(f)));
                else
                    factors.push_back(CVec(std::move(f)));
            } catch (const std::invalid_argument& e) {
                throw SetFormatError(fat + ": " + e.what());
            }
        }
        vectors.emplace_back(std::move(factors));
    }
    if (vectors.empty()) throw SetFormatError("\"vectors\" must not be empty");
    return validate_set(SystemShape(std::move(dims)), std::move(vectors), tol);
}

ProductVectorSet load_set(const std::string& path, const Tolerance& tol) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SetFormatError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return set_from_json(buf.str(), tol);
}

void save_set(const std::string& path, const ProductVectorSet& set) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw SetFormatError("cannot write " + path);
    out << set_to_json(set);
}

}  // namespace upbkit
