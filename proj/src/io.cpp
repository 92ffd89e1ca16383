#include "mfact/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <system_error>

namespace mfact::io {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

double parse_double(const std::string& tok, const char* what) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(std::string("invalid ") + what + ": '" + tok + "'");
    return v;
}

long parse_long(const std::string& tok, const char* what) {
    long v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(std::string("invalid ") + what + ": '" + tok + "'");
    return v;
}

// Next line that is neither blank nor a % comment.
bool next_content_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        std::size_t pos = line.find_first_not_of(" \t\r\n");
        if (pos == std::string::npos) continue;
        if (line[pos] == '%') continue;
        return true;
    }
    return false;
}

}  // namespace

MatrixFormat format_for_path(const std::filesystem::path& p) {
    return lower(p.extension().string()) == ".mtx" ? MatrixFormat::MatrixMarket
                                                   : MatrixFormat::DenseText;
}

std::optional<MatrixFormat> parse_format_name(const std::string& name) {
    const std::string n = lower(name);
    if (n == "mm" || n == "mtx" || n == "matrix-market") return MatrixFormat::MatrixMarket;
    if (n == "txt" || n == "dense" || n == "text") return MatrixFormat::DenseText;
    return std::nullopt;
}

MMatrix read_matrix_market(std::istream& in, double zero_tol) {
    std::string header;
    if (!std::getline(in, header)) throw ParseError("empty MatrixMarket stream");
    std::istringstream hs(header);
    std::string banner, object, fmt, field, symmetry;
    hs >> banner >> object >> fmt >> field >> symmetry;
    if (banner != "%%MatrixMarket" || lower(object) != "matrix")
        throw ParseError("missing %%MatrixMarket matrix banner");
    const std::string f = lower(fmt), fl = lower(field), sym = lower(symmetry);
    if (fl != "real" && fl != "integer")
        throw ParseError("unsupported MatrixMarket field: " + field);
    if (sym != "general")
        throw ParseError("unsupported MatrixMarket symmetry: " + symmetry);

    std::string line;
    if (!next_content_line(in, line)) throw ParseError("missing size line");
    std::istringstream ss(line);
    std::string t1, t2, t3;
    ss >> t1 >> t2;
    const long rows = parse_long(t1, "row count");
    const long cols = parse_long(t2, "column count");
    if (rows != cols) throw ParseError("matrix must be square");
    if (rows < 0 || rows > 100000) throw ParseError("unreasonable matrix order");
    const int n = static_cast<int>(rows);

    MMatrix a(n, zero_tol);
    if (f == "coordinate") {
        if (!(ss >> t3)) throw ParseError("missing nonzero count");
        const long nnz = parse_long(t3, "nonzero count");
        for (long e = 0; e < nnz; ++e) {
            if (!next_content_line(in, line)) throw ParseError("unexpected end of entries");
            std::istringstream es(line);
            std::string si, sj, sv;
            if (!(es >> si >> sj >> sv)) throw ParseError("malformed entry: '" + line + "'");
            const long i = parse_long(si, "row index"), j = parse_long(sj, "column index");
            if (i < 1 || i > n || j < 1 || j > n)
                throw ParseError("entry index out of range: '" + line + "'");
            a(static_cast<int>(i) - 1, static_cast<int>(j) - 1) = parse_double(sv, "value");
        }
    } else if (f == "array") {
        // column-major dense listing
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) {
                if (!next_content_line(in, line))
                    throw ParseError("unexpected end of array entries");
                std::istringstream es(line);
                std::string sv;
                es >> sv;
                a(i, j) = parse_double(sv, "value");
            }
    } else {
        throw ParseError("unsupported MatrixMarket format: " + fmt);
    }
    return a;
}

void write_matrix_market(std::ostream& out, const MMatrix& a) {
    long nnz = 0;
    for (double v : a.data())
        if (v != 0.0) ++nnz;
    out << "%%MatrixMarket matrix coordinate real general\n";
    out << a.size() << " " << a.size() << " " << nnz << "\n";
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j)
            if (a(i, j) != 0.0)
                out << (i + 1) << " " << (j + 1) << " " << format_double(a(i, j)) << "\n";
}

MMatrix read_dense_text(std::istream& in, double zero_tol) {
    std::string line;
    if (!next_content_line(in, line)) throw ParseError("empty dense-text stream");
    std::istringstream hs(line);
    std::string sn;
    hs >> sn;
    const long order = parse_long(sn, "order");
    if (order < 1 || order > 100000) throw ParseError("unreasonable matrix order");
    const int n = static_cast<int>(order);
    MMatrix a(n, zero_tol);
    // rows may wrap lines; read n*n whitespace-separated tokens
    std::string extra;
    std::getline(hs, extra);
    std::istringstream rest(extra);
    int count = 0;
    std::string tok;
    auto consume = [&](std::istringstream& s) {
        while (count < n * n && s >> tok) {
            a(count / n, count % n) = parse_double(tok, "entry");
            ++count;
        }
    };
    consume(rest);
    while (count < n * n) {
        if (!std::getline(in, line)) throw ParseError("unexpected end of matrix rows");
        std::istringstream ls(line);
        consume(ls);
    }
    return a;
}

void write_dense_text(std::ostream& out, const MMatrix& a) {
    out << a.size() << "\n";
    for (int i = 0; i < a.size(); ++i) {
        for (int j = 0; j < a.size(); ++j) {
            if (j) out << " ";
            out << format_double(a(i, j));
        }
        out << "\n";
    }
}

MMatrix read_matrix(const std::filesystem::path& p, std::optional<MatrixFormat> format,
                    double zero_tol) {
    std::ifstream in(p);
    if (!in) throw ParseError("cannot open '" + p.string() + "'");
    const MatrixFormat f = format.value_or(format_for_path(p));
    return f == MatrixFormat::MatrixMarket ? read_matrix_market(in, zero_tol)
                                           : read_dense_text(in, zero_tol);
}

void write_matrix(const std::filesystem::path& p, const MMatrix& a,
                  std::optional<MatrixFormat> format) {
    std::ofstream out(p);
    if (!out) throw Error("cannot write '" + p.string() + "'");
    const MatrixFormat f = format.value_or(format_for_path(p));
    if (f == MatrixFormat::MatrixMarket)
        write_matrix_market(out, a);
    else
        write_dense_text(out, a);
}

std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) throw Error("number formatting failed");
    return std::string(buf, ptr);
}

}  // namespace mfact::io
