#include "scforge/alist.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace scforge {

std::string alist_string(const LiftedCode& code) {
    const std::int64_t N = code.cols, M = code.rows;
    std::vector<std::vector<std::int32_t>> row_cols(static_cast<size_t>(M));
    for (std::int64_t c = 0; c < N; ++c)
        for (std::int32_t r : code.col_rows[static_cast<size_t>(c)])
            row_cols[r].push_back(static_cast<std::int32_t>(c));

    size_t max_col = 0, max_row = 0;
    for (const auto& v : code.col_rows) max_col = std::max(max_col, v.size());
    for (const auto& v : row_cols) max_row = std::max(max_row, v.size());

    std::ostringstream out;
    out << N << ' ' << M << '\n';
    out << max_col << ' ' << max_row << '\n';
    for (std::int64_t c = 0; c < N; ++c) out << code.col_rows[c].size() << (c + 1 < N ? ' ' : '\n');
    for (std::int64_t r = 0; r < M; ++r) out << row_cols[r].size() << (r + 1 < M ? ' ' : '\n');
    for (std::int64_t c = 0; c < N; ++c) {
        for (size_t i = 0; i < max_col; ++i) {
            out << (i < code.col_rows[c].size() ? code.col_rows[c][i] + 1 : 0);
            out << (i + 1 < max_col ? ' ' : '\n');
        }
    }
    for (std::int64_t r = 0; r < M; ++r) {
        for (size_t i = 0; i < max_row; ++i) {
            out << (i < row_cols[r].size() ? row_cols[r][i] + 1 : 0);
            out << (i + 1 < max_row ? ' ' : '\n');
        }
    }
    return out.str();
}

void write_file_atomic(const std::string& path, const std::string& contents) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw IoError("cannot open " + tmp + " for writing");
        f.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        if (!f) throw IoError("write failed for " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw IoError("rename failed for " + path);
}

void export_alist(const LiftedCode& code, const std::string& path) {
    write_file_atomic(path, alist_string(code));
}

AlistMatrix import_alist(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open " + path);
    AlistMatrix m;
    size_t max_col = 0, max_row = 0;
    if (!(f >> m.cols >> m.rows >> max_col >> max_row)) throw IoError("bad alist header");
    std::vector<int> col_deg(m.cols), row_deg(m.rows);
    for (auto& d : col_deg) f >> d;
    for (auto& d : row_deg) f >> d;
    m.col_rows.resize(static_cast<size_t>(m.cols));
    for (std::int64_t c = 0; c < m.cols; ++c) {
        for (size_t i = 0; i < max_col; ++i) {
            std::int64_t v;
            if (!(f >> v)) throw IoError("truncated alist column list");
            if (v) m.col_rows[c].push_back(static_cast<std::int32_t>(v - 1));
        }
        if (static_cast<int>(m.col_rows[c].size()) != col_deg[c])
            throw IoError("alist column degree mismatch");
    }
    // row lists are redundant; skip them
    return m;
}

} // namespace scforge
