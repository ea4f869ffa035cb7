#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "partpoly/eta.hpp"
#include "partpoly/report.hpp"

namespace partpoly {

enum class TableId { T1_delta_a0, T2_qn, T3_T2data, T4_Nb, T5_quotients, T6_smallest_x0, T7_B0, FIG1, FIG2 };

const char* table_id_name(TableId id);
/// Accepts the full name ("T4_Nb") or the short alias ("T4", "fig1").
std::optional<TableId> table_id_from_name(std::string_view name);
/// All nine ids, tables first, then the two figures.
std::vector<TableId> all_table_ids();

/// One comparison between an embedded expected value and what the library
/// computed. For cells encoding a known print discrepancy, match means the
/// discrepancy behaved exactly as documented (see the note).
struct TableCell {
    std::string label;
    std::string expected;
    std::string computed;
    bool match = false;
    std::string note;
};

struct TableReport {
    TableId table_id = TableId::T1_delta_a0;
    std::vector<TableCell> cells;

    bool pass() const;
    Json to_json() const;
    /// One headline line plus one line per failed cell.
    std::string summary() const;
};

struct VerifyOptions {
    int float_bits = 113;
    int threads = 0;  // <= 0 picks the hardware thread count
    int fig1_a_max = 30;
    int fig2_a_max = 40;
};

/// Recomputes every cell of the given table (or figure dataset) and compares
/// against embedded expected values: decimal tables to their printed digit
/// count, polynomial tables exactly. Throws if the EtaTable is too shallow.
TableReport reproduce(TableId id, const EtaTable& table, const VerifyOptions& opts = {});

/// Writes the roots-with-positive-real-part CSV for FIG1 (b = 2) or FIG2
/// (b = 27 and 28) under out_dir and returns the file path. Rows follow the
/// root CSV layout plus a per-polynomial observation column recording whether
/// every complex root stays left of the largest real root.
std::string figure_dataset(TableId which, int a_max, const EtaTable& table, const VerifyOptions& opts,
                           const std::string& out_dir);

}  // namespace partpoly
