#include "magma/table_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "magma/errors.hpp"

namespace magma {

namespace {

struct Token {
    std::string text;
    int column;  // 1-based character offset
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        if (i >= line.size()) break;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return tokens;
}

long parse_int(const std::string& file, int line, const Token& tok) {
    std::size_t used = 0;
    long value = 0;
    try {
        value = std::stol(tok.text, &used);
    } catch (const std::exception&) {
        throw ParseError(file, line, tok.column, "expected integer, got '" + tok.text + "'");
    }
    if (used != tok.text.size())
        throw ParseError(file, line, tok.column, "expected integer, got '" + tok.text + "'");
    return value;
}

struct RawTable {
    int n = 0;
    std::vector<Element> entries;
    std::vector<Element> codomain;
    std::optional<Element> identity;
};

// Shared reader for both formats; bit matrices restrict entries to {0,1}.
RawTable read_grid(std::istream& in, const std::string& file, bool bits_only) {
    RawTable raw;
    std::string line;
    int lineno = 0;
    int rows_read = 0;
    bool have_n = false;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto tokens = tokenize(line);
        if (tokens.empty() || tokens[0].text[0] == '#') continue;

        if (!have_n) {
            const auto& tok = tokens[0];
            if (tok.text.rfind("n=", 0) != 0)
                throw ParseError(file, lineno, tok.column, "expected 'n=<int>' header line");
            long n = parse_int(file, lineno, {tok.text.substr(2), tok.column + 2});
            if (n < 1) throw ParseError(file, lineno, tok.column, "order must be positive");
            raw.n = static_cast<int>(n);
            have_n = true;
            continue;
        }

        const auto& head = tokens[0];
        if (rows_read == 0 && !bits_only && head.text.rfind("identity=", 0) == 0) {
            long e = parse_int(file, lineno, {head.text.substr(9), head.column + 9});
            if (e < 0 || e >= raw.n)
                throw ParseError(file, lineno, head.column, "identity out of range [0," + std::to_string(raw.n) + ")");
            raw.identity = static_cast<Element>(e);
            continue;
        }
        if (rows_read == 0 && !bits_only && head.text.rfind("codomain=", 0) == 0) {
            std::vector<Token> values;
            values.push_back({head.text.substr(9), head.column + 9});
            for (std::size_t i = 1; i < tokens.size(); ++i) values.push_back(tokens[i]);
            for (const auto& v : values) {
                if (v.text.empty()) continue;
                long x = parse_int(file, lineno, v);
                if (x < 0 || x >= raw.n)
                    throw ParseError(file, lineno, v.column, "codomain element " + std::to_string(x) +
                                                                 " out of range [0," + std::to_string(raw.n) + ")");
                raw.codomain.push_back(static_cast<Element>(x));
            }
            continue;
        }

        if (rows_read >= raw.n)
            throw ParseError(file, lineno, head.column, "unexpected data after " + std::to_string(raw.n) + " rows");
        if (static_cast<int>(tokens.size()) != raw.n)
            throw ParseError(file, lineno, head.column,
                             "expected " + std::to_string(raw.n) + " entries, got " + std::to_string(tokens.size()));
        for (const auto& tok : tokens) {
            long v = parse_int(file, lineno, tok);
            const long hi = bits_only ? 2 : raw.n;
            if (v < 0 || v >= hi)
                throw ParseError(file, lineno, tok.column,
                                 "entry " + std::to_string(v) + " out of range [0," + std::to_string(hi) + ")");
            raw.entries.push_back(static_cast<Element>(v));
        }
        ++rows_read;
    }

    if (!have_n) throw ParseError(file, lineno ? lineno : 1, 1, "missing 'n=<int>' header");
    if (rows_read != raw.n)
        throw ParseError(file, lineno ? lineno : 1, 1,
                         "expected " + std::to_string(raw.n) + " rows, got " + std::to_string(rows_read));
    return raw;
}

}  // namespace

MagmaTable parse_table(std::istream& in, const std::string& filename) {
    RawTable raw = read_grid(in, filename, false);
    try {
        return MagmaTable(raw.n, std::move(raw.entries), std::move(raw.codomain), raw.identity);
    } catch (const std::invalid_argument& ex) {
        throw ParseError(filename, 1, 1, ex.what());
    }
}

MagmaTable parse_table_string(const std::string& text, const std::string& filename) {
    std::istringstream in(text);
    return parse_table(in, filename);
}

MagmaTable load_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 1, 1, "cannot open file");
    return parse_table(in, path);
}

std::string format_table(const MagmaTable& table, const std::string& comment) {
    std::ostringstream out;
    if (!comment.empty()) out << "# " << comment << "\n";
    out << "n=" << table.size() << "\n";
    if (auto e = table.declared_identity()) out << "identity=" << *e << "\n";
    out << "codomain=";
    for (std::size_t i = 0; i < table.codomain().size(); ++i)
        out << (i ? " " : "") << table.codomain()[i];
    out << "\n";
    for (Element i = 0; i < table.size(); ++i) {
        for (Element j = 0; j < table.size(); ++j) out << (j ? " " : "") << table.at(i, j);
        out << "\n";
    }
    return out.str();
}

BitMatrix parse_bit_matrix(std::istream& in, const std::string& filename) {
    RawTable raw = read_grid(in, filename, true);
    BitMatrix m(raw.n);
    for (int i = 0; i < raw.n; ++i)
        for (int j = 0; j < raw.n; ++j) m.set(i, j, static_cast<std::uint8_t>(raw.entries[static_cast<std::size_t>(i) * raw.n + j]));
    return m;
}

BitMatrix parse_bit_matrix_string(const std::string& text, const std::string& filename) {
    std::istringstream in(text);
    return parse_bit_matrix(in, filename);
}

BitMatrix load_bit_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 1, 1, "cannot open file");
    return parse_bit_matrix(in, path);
}

std::string format_bit_matrix(const BitMatrix& m, const std::string& comment) {
    std::ostringstream out;
    if (!comment.empty()) out << "# " << comment << "\n";
    out << "n=" << m.n << "\n";
    for (int i = 0; i < m.n; ++i) {
        for (int j = 0; j < m.n; ++j) out << (j ? " " : "") << static_cast<int>(m.at(i, j));
        out << "\n";
    }
    return out.str();
}

}  // namespace magma
