#pragma once

/**
 * @file table_document.hpp
 * @brief Multiplication-table documents and their text/CSV/JSON emitters.
 *
 * Output is byte-stable: fixed basis order, no locale formatting, sorted
 * JSON keys.
 */

#include "cayley_dickson.hpp"
#include "loop16.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace octoloop {

struct TableDocument {
    std::size_t dim = 0;
    std::vector<std::string> basis_names;
    std::vector<std::vector<std::string>> entries; // entries[r][c] = basis[r] * basis[c]
    std::string convention_note;
};

/// dim 4 from the quaternions, dim 8 from the loop, dim 16 from the tower.
/// Dims 4 and 8 carry the named basis; the sedenion basis is e0..e15.
inline TableDocument make_table_document(std::size_t dim) {
    TableDocument doc;
    doc.dim = dim;
    doc.convention_note = "entry[row][col] = basis[row] * basis[col]";
    switch (dim) {
    case 4: {
        for (std::size_t s = 0; s < 4; ++s)
            doc.basis_names.emplace_back(kBasisNames[s]);
        const SignedTable t = quaternion_reference_table();
        doc.entries.resize(4);
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c)
                doc.entries[r].push_back((t[r][c].negative ? "-" : "") +
                                         doc.basis_names[t[r][c].index]);
        return doc;
    }
    case 8: {
        for (std::size_t s = 0; s < 8; ++s)
            doc.basis_names.emplace_back(kBasisNames[s]);
        doc.entries.resize(8);
        for (const BasisIndex r : kAllBasisIndices)
            for (const BasisIndex c : kAllBasisIndices)
                doc.entries[static_cast<std::size_t>(r)].push_back(
                    name(loop_table().entry(r, c)));
        return doc;
    }
    case 16: {
        for (std::size_t s = 0; s < 16; ++s)
            doc.basis_names.push_back("e" + std::to_string(s));
        const SignedTable t = build_table(16);
        doc.entries.resize(16);
        for (std::size_t r = 0; r < 16; ++r)
            for (std::size_t c = 0; c < 16; ++c)
                doc.entries[r].push_back((t[r][c].negative ? "-" : "") +
                                         doc.basis_names[t[r][c].index]);
        return doc;
    }
    default:
        throw std::invalid_argument("table dimension must be 4, 8 or 16");
    }
}

inline std::string to_text(const TableDocument& doc) {
    std::size_t width = 0;
    for (const std::string& n : doc.basis_names)
        width = std::max(width, n.size());
    for (const auto& row : doc.entries)
        for (const std::string& e : row)
            width = std::max(width, e.size());

    std::ostringstream os;
    os << "basis product table, dim " << doc.dim << " (" << doc.convention_note << ")\n";
    os << std::string(width, ' ');
    for (const std::string& n : doc.basis_names)
        os << " " << std::setw(static_cast<int>(width)) << n;
    os << "\n";
    for (std::size_t r = 0; r < doc.entries.size(); ++r) {
        os << std::setw(static_cast<int>(width)) << doc.basis_names[r];
        for (const std::string& e : doc.entries[r])
            os << " " << std::setw(static_cast<int>(width)) << e;
        os << "\n";
    }
    return os.str();
}

inline std::string to_csv(const TableDocument& doc) {
    std::ostringstream os;
    for (const std::string& n : doc.basis_names)
        os << "," << n;
    os << "\n";
    for (std::size_t r = 0; r < doc.entries.size(); ++r) {
        os << doc.basis_names[r];
        for (const std::string& e : doc.entries[r])
            os << "," << e;
        os << "\n";
    }
    return os.str();
}

inline std::string to_json(const TableDocument& doc) {
    nlohmann::json j;
    j["dim"] = doc.dim;
    j["basis"] = doc.basis_names;
    j["table"] = doc.entries;
    return j.dump(2) + "\n";
}

} // namespace octoloop
