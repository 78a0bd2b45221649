#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "drsrd/information_table.hpp"
#include "drsrd/record.hpp"
#include "drsrd/taxonomy.hpp"

namespace drsrd {

// File-backed store of advertised resources. A Repository handle is an
// immutable snapshot; register/deregister return a new snapshot after the
// whole backing file has been rewritten. Readers take a shared advisory lock
// on the file, the writer an exclusive one.
//
// File format: one record per line, UTF-8, LF endings:
//   <id>\t<prop>=<typed-value>;<prop>=<typed-value>;...
// An empty right-hand side in `<prop>=` denotes Null; value syntax follows
// the property's declared type in the taxonomy.
class Repository {
public:
    Repository() = default;

    static Repository load(const std::filesystem::path& path, const Taxonomy& tax);
    // Snapshot without a backing file (mutations stay in memory).
    static Repository in_memory(std::vector<ResourceRecord> records, const Taxonomy& tax);
    // Empty repository bound to a (possibly not yet existing) backing file.
    static Repository empty_at(const std::filesystem::path& path);

    const std::vector<ResourceRecord>& records() const { return records_; }
    const std::filesystem::path& path() const { return path_; }
    std::size_t size() const { return records_.size(); }

    const ResourceRecord* find(std::string_view id) const;

    // Appends a validated record and commits. Errors: duplicate id, unknown
    // property, type mismatch, non-positive numeric value.
    Repository with_registered(ResourceRecord record, const Taxonomy& tax) const;
    // Removes an existing record and commits.
    Repository with_deregistered(std::string_view id) const;

    // Objects in insertion order, attributes as given; properties a record
    // does not carry become Null cells.
    InformationTable to_information_table(std::span<const std::string> property_names) const;

    void save() const;                                     // rewrite backing file
    void save_as(const std::filesystem::path& path) const; // rewrite explicit path

    std::string serialize() const;

private:
    std::vector<ResourceRecord> records_;
    std::filesystem::path path_;
};

// Record validation shared by load and register.
void validate_record(const ResourceRecord& record, const Taxonomy& tax);

}  // namespace drsrd
