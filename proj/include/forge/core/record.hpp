#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace forge {

// Structured-text records: one record per line, space-separated key=value
// pairs, values quoted when they contain whitespace or quotes. Keys are kept
// sorted so emitted files are byte-stable across runs.
class Record {
  public:
    void set(const std::string& key, const std::string& value);
    void set_int(const std::string& key, int64_t value);
    void set_double(const std::string& key, double value);
    void set_bool(const std::string& key, bool value);

    bool has(const std::string& key) const;
    const std::string& get(const std::string& key) const;
    std::string get_or(const std::string& key, const std::string& fallback) const;
    int64_t get_int(const std::string& key) const;
    double get_double(const std::string& key) const;
    bool get_bool(const std::string& key) const;

    std::string to_line() const;
    static Record from_line(const std::string& line);

    const std::map<std::string, std::string>& fields() const { return fields_; }

  private:
    std::map<std::string, std::string> fields_;
};

void write_records(const std::string& path, const std::vector<Record>& records);
std::vector<Record> read_records(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace forge
