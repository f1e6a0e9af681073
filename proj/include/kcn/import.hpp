#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "kcn/corpus.hpp"

namespace kcn {

enum class ImportFormat { csv, ris };

struct ImportResult {
    std::vector<RawArticle> articles;
    std::vector<std::string> warnings;  // skipped rows/records, with location
};

// Reads a database export file. CSV needs a header row with title, year and
// keywords columns (case-insensitive); RIS uses TI/PY/KW/ER tags. Rows or
// records without a parseable year are skipped with a warning. A missing
// required CSV column or an unreadable file throws.
ImportResult import_export_file(const std::filesystem::path& path, Source source,
                                ImportFormat format);

}  // namespace kcn
