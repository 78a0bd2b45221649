#include "drsrd/repository.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

#include "drsrd/error.hpp"

#ifdef __unix__
#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>
#endif

namespace drsrd {

namespace {

#ifdef __unix__
// Advisory lock held for the duration of a load or save.
class FileLock {
public:
    FileLock(const std::filesystem::path& path, bool exclusive) {
        fd_ = ::open(path.c_str(), O_RDONLY | O_CREAT, 0644);
        if (fd_ >= 0)
            ::flock(fd_, exclusive ? LOCK_EX : LOCK_SH);
    }
    ~FileLock() {
        if (fd_ >= 0) {
            ::flock(fd_, LOCK_UN);
            ::close(fd_);
        }
    }
    FileLock(const FileLock&) = delete;
    FileLock& operator=(const FileLock&) = delete;

private:
    int fd_ = -1;
};
#else
class FileLock {
public:
    FileLock(const std::filesystem::path&, bool) {}
};
#endif

void check_id(const std::string& id) {
    if (id.empty())
        throw Error("empty resource id");
    for (char c : id)
        if (c == '\t' || c == '\n' || c == '\r' || c == ';' || c == ',' || c == '=')
            throw Error("resource id contains a reserved character: '" + id + "'");
}

ResourceRecord parse_record_line(const std::string& line, const Taxonomy& tax,
                                 const std::string& source, std::size_t line_no) {
    const auto tab = line.find('\t');
    if (tab == std::string::npos)
        throw Error(source + ":" + std::to_string(line_no) + ": missing tab separator");
    ResourceRecord record;
    record.id = line.substr(0, tab);
    std::string rest = line.substr(tab + 1);
    if (!rest.empty() && rest.back() == '\r')
        rest.pop_back();
    std::size_t start = 0;
    while (start < rest.size()) {
        auto end = rest.find(';', start);
        if (end == std::string::npos)
            end = rest.size();
        const std::string entry = rest.substr(start, end - start);
        start = end + 1;
        if (entry.empty())
            throw Error(source + ":" + std::to_string(line_no) + ": empty property entry");
        const auto eq = entry.find('=');
        if (eq == std::string::npos)
            throw Error(source + ":" + std::to_string(line_no) + ": property entry without '=': '" + entry + "'");
        const std::string name = entry.substr(0, eq);
        const std::string value_text = entry.substr(eq + 1);
        const auto idx = tax.property_index(name);
        if (!idx)
            throw Error(source + ":" + std::to_string(line_no) + ": unknown property '" + name + "'");
        try {
            record.values.emplace_back(name, value_text.empty()
                                                 ? AttributeValue::null()
                                                 : parse_typed_value(tax.properties()[*idx].value_type, value_text));
        } catch (const Error& e) {
            throw Error(source + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    return record;
}

}  // namespace

void validate_record(const ResourceRecord& record, const Taxonomy& tax) {
    check_id(record.id);
    std::unordered_set<std::string> seen;
    for (const auto& [name, value] : record.values) {
        if (!seen.insert(name).second)
            throw Error("record '" + record.id + "' repeats property '" + name + "'");
        const auto& def = tax.property_named(name);
        if (value.is_null())
            continue;
        if (value.type() != def.value_type)
            throw Error("record '" + record.id + "': value of '" + name + "' is not of type " +
                        value_type_name(def.value_type));
        if (def.value_type != ValueType::Text && !(value.numeric() > 0.0))
            throw Error("record '" + record.id + "': numeric value of '" + name + "' must be positive");
    }
}

Repository Repository::load(const std::filesystem::path& path, const Taxonomy& tax) {
    FileLock lock(path, /*exclusive=*/false);
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open repository file '" + path.string() + "'");
    Repository repo;
    repo.path_ = path;
    std::string line;
    std::size_t line_no = 0;
    std::unordered_set<std::string> ids;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            continue;
        ResourceRecord record = parse_record_line(line, tax, path.string(), line_no);
        validate_record(record, tax);
        if (!ids.insert(record.id).second)
            throw Error(path.string() + ":" + std::to_string(line_no) + ": duplicate id '" + record.id + "'");
        repo.records_.push_back(std::move(record));
    }
    return repo;
}

Repository Repository::in_memory(std::vector<ResourceRecord> records, const Taxonomy& tax) {
    Repository repo;
    std::unordered_set<std::string> ids;
    for (auto& record : records) {
        validate_record(record, tax);
        if (!ids.insert(record.id).second)
            throw Error("duplicate id '" + record.id + "'");
        repo.records_.push_back(std::move(record));
    }
    return repo;
}

Repository Repository::empty_at(const std::filesystem::path& path) {
    Repository repo;
    repo.path_ = path;
    return repo;
}

const ResourceRecord* Repository::find(std::string_view id) const {
    for (const auto& record : records_)
        if (record.id == id)
            return &record;
    return nullptr;
}

Repository Repository::with_registered(ResourceRecord record, const Taxonomy& tax) const {
    validate_record(record, tax);
    if (find(record.id))
        throw Error("duplicate id '" + record.id + "'");
    Repository next(*this);
    next.records_.push_back(std::move(record));
    if (!next.path_.empty())
        next.save();
    return next;
}

Repository Repository::with_deregistered(std::string_view id) const {
    Repository next(*this);
    const auto it = std::find_if(next.records_.begin(), next.records_.end(),
                                 [&](const ResourceRecord& r) { return r.id == id; });
    if (it == next.records_.end())
        throw Error("unknown id '" + std::string(id) + "'");
    next.records_.erase(it);
    if (!next.path_.empty())
        next.save();
    return next;
}

InformationTable Repository::to_information_table(std::span<const std::string> property_names) const {
    std::vector<std::string> objects;
    objects.reserve(records_.size());
    for (const auto& record : records_)
        objects.push_back(record.id);
    std::vector<std::string> attrs(property_names.begin(), property_names.end());
    std::vector<AttributeValue> cells;
    cells.reserve(objects.size() * attrs.size());
    for (const auto& record : records_)
        for (const auto& name : attrs) {
            const AttributeValue* v = record.find(name);
            cells.push_back(v ? *v : AttributeValue::null());
        }
    return InformationTable(std::move(objects), std::move(attrs), std::move(cells));
}

std::string Repository::serialize() const {
    std::string out;
    for (const auto& record : records_) {
        out += record.id;
        out += '\t';
        for (std::size_t i = 0; i < record.values.size(); ++i) {
            if (i > 0)
                out += ';';
            out += record.values[i].first;
            out += '=';
            out += record.values[i].second.str();
        }
        out += '\n';
    }
    return out;
}

void Repository::save() const {
    if (path_.empty())
        throw Error("repository has no backing file");
    save_as(path_);
}

void Repository::save_as(const std::filesystem::path& path) const {
    FileLock lock(path, /*exclusive=*/true);
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw Error("cannot write repository file '" + tmp.string() + "'");
        out << serialize();
        if (!out.flush())
            throw Error("write failed for '" + tmp.string() + "'");
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace drsrd
