#include "midext/serialize.hpp"

namespace midext {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream is(line);
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
}

std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> out;
    size_t pos = 0;
    while (true) {
        size_t next = s.find(sep, pos);
        out.push_back(s.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

namespace {

const char* kKeys[] = {"field", "epsilon", "shift", "twist", "orientation",
                       "rows", "cols", "degrees", "kind", "twists", "value_degree"};

bool is_kv_line(const std::string& line, std::string& key, std::string& value) {
    auto sp = line.find(' ');
    std::string head = line.substr(0, sp);
    for (const char* k : kKeys)
        if (head == k) {
            key = head;
            value = sp == std::string::npos ? "" : line.substr(sp + 1);
            // trim
            while (!value.empty() && value.front() == ' ') value.erase(value.begin());
            while (!value.empty() && value.back() == ' ') value.pop_back();
            return true;
        }
    return false;
}

} // namespace

std::vector<Section> parse_sections(std::istream& in) {
    std::vector<Section> out;
    Section cur;
    bool open = false;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\r' || line.back() == '\t'))
            line.pop_back();
        size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        line = line.substr(start);
        if (line.front() == '[') {
            auto close = line.find(']');
            if (close == std::string::npos) throw parse_error("unterminated section header: " + line);
            std::string name = line.substr(1, close - 1);
            if (name == "end") {
                if (!open) throw parse_error("[end] with no open section");
                out.push_back(cur);
                cur = Section{};
                open = false;
            } else {
                if (open) throw parse_error("section [" + cur.name + "] not closed before [" + name + "]");
                cur.name = name;
                open = true;
            }
            continue;
        }
        if (!open) throw parse_error("content outside any section: " + line);
        std::string key, value;
        if (is_kv_line(line, key, value))
            cur.kv[key] = value;
        else
            cur.rows.push_back(line);
    }
    if (open) throw parse_error("section [" + cur.name + "] never closed");
    return out;
}

std::vector<Section> parse_sections_text(const std::string& text) {
    std::istringstream is(text);
    return parse_sections(is);
}

SplitBundle bundle_from_section(const Section& sec) {
    std::vector<int> ds;
    std::string degrees = sec.need("degrees");
    if (!degrees.empty()) {
        for (const auto& tok : split_on(degrees, ',')) {
            try {
                ds.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw parse_error("bad degree '" + tok + "'");
            }
        }
    }
    return SplitBundle(std::move(ds));
}

std::string bundle_to_section(const SplitBundle& v) {
    std::string s = "[bundle]\ndegrees ";
    for (size_t i = 0; i < v.degrees.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v.degrees[i]);
    }
    s += "\n[end]\n";
    return s;
}

} // namespace midext
