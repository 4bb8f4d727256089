#pragma once

#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "midext/forms.hpp"
#include "midext/p1k0.hpp"

namespace midext {

/// Line-oriented object format: one object per [name]...[end] section,
/// "key value" lines for scalar fields, bare lines for matrix rows.
/// Rationals print as "p/q", F_p entries as integers, rational functions
/// as "c0,c1,.../d0,d1,..." coefficient lists in the chart variable.
struct Section {
    std::string name;
    std::map<std::string, std::string> kv;
    std::vector<std::string> rows;

    const std::string& need(const std::string& key) const {
        auto it = kv.find(key);
        if (it == kv.end()) throw parse_error("section [" + name + "] is missing '" + key + "'");
        return it->second;
    }
    bool has(const std::string& key) const { return kv.count(key) != 0; }
};

std::vector<Section> parse_sections(std::istream& in);
std::vector<Section> parse_sections_text(const std::string& text);
std::vector<std::string> split_ws(const std::string& line);
std::vector<std::string> split_on(const std::string& s, char sep);

template <class F>
Mat<F> matrix_from_section(const F& f, const Section& sec) {
    if (sec.has("field") && sec.need("field") != f.name())
        throw parse_error("section field '" + sec.need("field") + "' does not match " + f.name());
    int rows = std::stoi(sec.need("rows"));
    int cols = std::stoi(sec.need("cols"));
    if (static_cast<int>(sec.rows.size()) != rows)
        throw parse_error("expected " + std::to_string(rows) + " matrix rows");
    Mat<F> m(f, rows, cols);
    for (int i = 0; i < rows; ++i) {
        auto toks = split_ws(sec.rows[i]);
        if (static_cast<int>(toks.size()) != cols) throw parse_error("row " + std::to_string(i) + " has wrong length");
        for (int j = 0; j < cols; ++j) m(i, j) = f.parse(toks[j]);
    }
    return m;
}

template <class F>
std::string matrix_to_section(const std::string& name, const Mat<F>& m) {
    std::ostringstream os;
    os << "[" << name << "]\n";
    os << "field " << m.field().name() << "\n";
    os << "rows " << m.rows() << "\ncols " << m.cols() << "\n";
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) os << ' ';
            os << m.field().print(m(i, j));
        }
        os << '\n';
    }
    os << "[end]\n";
    return os.str();
}

template <class F>
TwistedForm<F> form_from_section(const F& f, const Section& sec) {
    TwistedForm<F> form{matrix_from_section(f, sec), std::stoi(sec.need("epsilon")),
                        sec.has("twist") ? Twist::parse(sec.need("twist")) : Twist::trivial(),
                        sec.has("shift") ? std::stoi(sec.need("shift")) : 0, std::nullopt};
    if (sec.has("orientation")) form.orientation = f.parse(sec.need("orientation"));
    if (!form.shape_ok()) throw parse_error("gram matrix is not ε-symmetric");
    return form;
}

template <class F>
std::string form_to_section(const TwistedForm<F>& form) {
    std::ostringstream os;
    os << "[form]\n";
    os << "field " << form.field().name() << "\n";
    os << "epsilon " << form.epsilon << "\n";
    os << "shift " << form.shift << "\n";
    os << "twist " << form.twist.to_string() << "\n";
    if (form.orientation) os << "orientation " << form.field().print(*form.orientation) << "\n";
    os << "rows " << form.gram.rows() << "\ncols " << form.gram.cols() << "\n";
    for (int i = 0; i < form.gram.rows(); ++i) {
        for (int j = 0; j < form.gram.cols(); ++j) {
            if (j) os << ' ';
            os << form.field().print(form.gram(i, j));
        }
        os << '\n';
    }
    os << "[end]\n";
    return os.str();
}

SplitBundle bundle_from_section(const Section& sec);
std::string bundle_to_section(const SplitBundle& v);

} // namespace midext
