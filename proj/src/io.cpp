#include "fspace/io.hpp"

#include <fstream>
#include <sstream>

#include "fspace/errors.hpp"

namespace fspace {

namespace {

struct Line {
    int number;
    std::string text;
};

std::vector<Line> data_lines(std::istream& in) {
    std::vector<Line> out;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        std::string text = raw;
        if (auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
        std::size_t begin = text.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        std::size_t end = text.find_last_not_of(" \t\r");
        out.push_back({number, text.substr(begin, end - begin + 1)});
    }
    return out;
}

std::vector<std::string> tokens(const std::string& text) {
    std::istringstream stream(text);
    std::vector<std::string> out;
    std::string token;
    while (stream >> token) out.push_back(token);
    return out;
}

int parse_int(const std::string& token, const std::string& source, int line) {
    try {
        std::size_t used = 0;
        int value = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return value;
    } catch (const std::exception&) {
        throw FormatError(source, line, "expected an integer, got '" + token + "'");
    }
}

std::ifstream open_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError(path, 0, "cannot open file");
    return in;
}

}  // namespace

Poset read_poset(std::istream& in, const std::string& source) {
    auto lines = data_lines(in);
    if (lines.empty()) throw FormatError(source, 0, "empty poset file");
    auto head = tokens(lines[0].text);
    if (head.size() != 1)
        throw FormatError(source, lines[0].number, "first data line must be the point count");
    const int n = parse_int(head[0], source, lines[0].number);
    if (n < 1) throw FormatError(source, lines[0].number, "point count must be >= 1");

    std::size_t next = 1;
    std::vector<std::string> labels;
    if (next < lines.size() && lines[next].text.rfind("labels:", 0) == 0) {
        labels = tokens(lines[next].text.substr(7));
        if (static_cast<int>(labels.size()) != n)
            throw FormatError(source, lines[next].number,
                              "expected " + std::to_string(n) + " labels, got " +
                                  std::to_string(labels.size()));
        ++next;
    }

    std::vector<std::pair<int, int>> relations;
    for (; next < lines.size(); ++next) {
        auto parts = tokens(lines[next].text);
        if (parts.size() != 2)
            throw FormatError(source, lines[next].number, "expected a relation line 'i j'");
        int i = parse_int(parts[0], source, lines[next].number);
        int j = parse_int(parts[1], source, lines[next].number);
        if (i < 1 || i > n || j < 1 || j > n)
            throw FormatError(source, lines[next].number, "relation index out of range");
        if (i == j)
            throw FormatError(source, lines[next].number, "a relation needs two distinct points");
        relations.emplace_back(i - 1, j - 1);
    }
    return Poset::from_relations(n, relations, std::move(labels));
}

ZeroOneMatrix read_matrix(std::istream& in, const std::string& source) {
    auto lines = data_lines(in);
    if (lines.empty()) throw FormatError(source, 0, "empty matrix file");
    const int n = static_cast<int>(lines[0].text.size());
    if (static_cast<int>(lines.size()) != n)
        throw FormatError(source, lines.back().number,
                          "expected " + std::to_string(n) + " rows, got " +
                              std::to_string(lines.size()));
    std::vector<std::uint8_t> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& line : lines) {
        if (static_cast<int>(line.text.size()) != n)
            throw FormatError(source, line.number, "row length does not match");
        for (char c : line.text) {
            if (c != '0' && c != '1')
                throw FormatError(source, line.number, std::string("bad character '") + c + "'");
            entries.push_back(c == '1' ? 1 : 0);
        }
    }
    return ZeroOneMatrix::from_entries(n, std::move(entries));
}

SimplicialComplex read_complex(std::istream& in, const std::string& source) {
    auto lines = data_lines(in);
    if (lines.empty()) throw FormatError(source, 0, "empty complex file");
    std::vector<std::string> vertices;
    std::vector<std::vector<int>> facets;
    auto vertex_index = [&](const std::string& name) {
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (vertices[i] == name) return static_cast<int>(i);
        vertices.push_back(name);
        return static_cast<int>(vertices.size() - 1);
    };
    for (const auto& line : lines) {
        auto parts = tokens(line.text);
        std::vector<int> facet;
        for (const auto& name : parts) facet.push_back(vertex_index(name));
        facets.push_back(std::move(facet));
    }
    return SimplicialComplex::from_facets(std::move(vertices), std::move(facets));
}

std::vector<Permutation> read_action(std::istream& in, const std::string& source) {
    auto lines = data_lines(in);
    if (lines.empty()) throw FormatError(source, 0, "empty action file");
    std::vector<Permutation> perms;
    std::size_t n = 0;
    for (const auto& line : lines) {
        std::string body = line.text;
        if (auto colon = body.find(':'); colon != std::string::npos) body = body.substr(colon + 1);
        auto parts = tokens(body);
        if (parts.empty()) throw FormatError(source, line.number, "empty permutation");
        Permutation perm;
        for (const auto& token : parts) perm.push_back(parse_int(token, source, line.number) - 1);
        if (perms.empty())
            n = perm.size();
        else if (perm.size() != n)
            throw FormatError(source, line.number, "permutation length does not match");
        for (int v : perm)
            if (v < 0 || v >= static_cast<int>(n))
                throw FormatError(source, line.number, "image out of range");
        perms.push_back(std::move(perm));
    }
    for (std::size_t i = 0; i < n; ++i)
        if (perms[0][i] != static_cast<int>(i))
            throw FormatError(source, lines[0].number, "first permutation must be the identity");
    return perms;
}

Poset load_poset_file(const std::string& path) {
    auto in = open_file(path);
    return read_poset(in, path);
}

ZeroOneMatrix load_matrix_file(const std::string& path) {
    auto in = open_file(path);
    return read_matrix(in, path);
}

SimplicialComplex load_complex_file(const std::string& path) {
    auto in = open_file(path);
    return read_complex(in, path);
}

std::vector<Permutation> load_action_file(const std::string& path) {
    auto in = open_file(path);
    return read_action(in, path);
}

Poset load_poset_or_matrix(const std::string& path) {
    if (path.ends_with(".pm")) return poset_from_matrix(load_matrix_file(path));
    return load_poset_file(path);
}

std::string write_poset(const Poset& p) {
    std::string out = std::to_string(p.size()) + "\n";
    out += "labels:";
    for (const auto& label : p.labels()) out += " " + label;
    out += "\n";
    for (auto [i, j] : covers(p))
        out += std::to_string(i + 1) + " " + std::to_string(j + 1) + "\n";
    return out;
}

std::string write_matrix(const ZeroOneMatrix& m) {
    std::string out;
    for (int i = 0; i < m.order(); ++i) {
        for (int j = 0; j < m.order(); ++j) out += m.at(i, j) ? '1' : '0';
        out += '\n';
    }
    return out;
}

std::string write_complex(const SimplicialComplex& k) {
    std::string out;
    for (const auto& facet : k.facets()) {
        for (std::size_t t = 0; t < facet.size(); ++t) {
            if (t) out += ' ';
            out += k.vertices()[facet[t]];
        }
        out += '\n';
    }
    return out;
}

nlohmann::json big_to_json(const BigInt& v) {
    if (v.fits_slong_p()) return static_cast<long long>(v.get_si());
    return v.get_str();
}

nlohmann::json json_document(const std::string& command) {
    nlohmann::json doc;
    doc["schema"] = "fspace/1";
    doc["command"] = command;
    return doc;
}

nlohmann::json to_json(const Poset& p) {
    nlohmann::json j;
    j["n"] = p.size();
    j["labels"] = p.labels();
    nlohmann::json relations = nlohmann::json::array();
    for (auto [a, b] : covers(p)) relations.push_back({a + 1, b + 1});
    j["covers"] = relations;
    return j;
}

nlohmann::json to_json(const ZeroOneMatrix& m) {
    nlohmann::json j;
    j["n"] = m.order();
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.order(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int k = 0; k < m.order(); ++k) row.push_back(m.at(i, k));
        rows.push_back(std::move(row));
    }
    j["entries"] = rows;
    return j;
}

nlohmann::json to_json(const SumProfile& s) {
    nlohmann::json j;
    j["rowSums"] = s.row_sums;
    j["colSums"] = s.col_sums;
    j["total"] = s.total;
    return j;
}

nlohmann::json to_json(const ReductionTrace& t) {
    nlohmann::json moves = nlohmann::json::array();
    for (const auto& move : t.moves) {
        nlohmann::json m;
        m["index"] = move.index + 1;
        m["label"] = move.label;
        m["move"] = move_kind_name(move.move);
        if (move.witness) m["witness"] = *move.witness;
        moves.push_back(std::move(m));
    }
    return moves;
}

nlohmann::json to_json(const InvariantsBundle& b) {
    nlohmann::json j;
    j["absDet"] = big_to_json(b.abs_det);
    j["det"] = big_to_json(b.det);
    j["rankBar"] = b.rank_bar;
    j["reducedEuler"] = big_to_json(b.reduced_euler);
    j["eulerConsistent"] = b.euler_consistent;
    j["sums"] = to_json(b.sums);
    return j;
}

nlohmann::json to_json(const SimplicialComplex& k) {
    nlohmann::json j;
    j["vertices"] = k.vertices();
    nlohmann::json facets = nlohmann::json::array();
    for (const auto& facet : k.facets()) {
        nlohmann::json names = nlohmann::json::array();
        for (int v : facet) names.push_back(k.vertices()[v]);
        facets.push_back(std::move(names));
    }
    j["facets"] = facets;
    j["fVector"] = k.f_vector();
    return j;
}

nlohmann::json to_json(const GammaTable& t) {
    nlohmann::json j;
    nlohmann::json values = nlohmann::json::array();
    for (const auto& g : t.gamma) values.push_back(big_to_json(g));
    j["gamma"] = values;
    j["detPlusIdentity"] = big_to_json(t.det_plus_identity);
    return j;
}

nlohmann::json to_json(const IntPolynomial& p) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(big_to_json(c));
    return coeffs;
}

}  // namespace fspace
