#include "forge/core/record.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "forge/core/error.hpp"

namespace forge {

namespace {

bool needs_quotes(const std::string& v) {
    if (v.empty()) return true;
    for (char ch : v)
        if (ch == ' ' || ch == '\t' || ch == '"' || ch == '\\' || ch == '\n') return true;
    return false;
}

std::string quote(const std::string& v) {
    std::string out = "\"";
    for (char ch : v) {
        if (ch == '"' || ch == '\\') out += '\\';
        if (ch == '\n') {
            out += "\\n";
            continue;
        }
        out += ch;
    }
    out += '"';
    return out;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

void Record::set(const std::string& key, const std::string& value) { fields_[key] = value; }
void Record::set_int(const std::string& key, int64_t value) { fields_[key] = std::to_string(value); }
void Record::set_double(const std::string& key, double value) { fields_[key] = format_double(value); }
void Record::set_bool(const std::string& key, bool value) { fields_[key] = value ? "true" : "false"; }

bool Record::has(const std::string& key) const { return fields_.count(key) != 0; }

const std::string& Record::get(const std::string& key) const {
    auto it = fields_.find(key);
    require(it != fields_.end(), "record: missing key '" + key + "'", ErrorCode::io);
    return it->second;
}

std::string Record::get_or(const std::string& key, const std::string& fallback) const {
    auto it = fields_.find(key);
    return it == fields_.end() ? fallback : it->second;
}

int64_t Record::get_int(const std::string& key) const { return std::stoll(get(key)); }
double Record::get_double(const std::string& key) const { return std::stod(get(key)); }
bool Record::get_bool(const std::string& key) const { return get(key) == "true"; }

std::string Record::to_line() const {
    std::string out;
    for (const auto& [k, v] : fields_) {
        if (!out.empty()) out += ' ';
        out += k;
        out += '=';
        out += needs_quotes(v) ? quote(v) : v;
    }
    return out;
}

Record Record::from_line(const std::string& line) {
    Record rec;
    size_t i = 0;
    const size_t n = line.size();
    while (i < n) {
        while (i < n && line[i] == ' ') ++i;
        if (i >= n) break;
        size_t eq = line.find('=', i);
        require(eq != std::string::npos, "record: malformed line '" + line + "'", ErrorCode::io);
        std::string key = line.substr(i, eq - i);
        i = eq + 1;
        std::string value;
        if (i < n && line[i] == '"') {
            ++i;
            while (i < n && line[i] != '"') {
                if (line[i] == '\\' && i + 1 < n) {
                    ++i;
                    value += (line[i] == 'n') ? '\n' : line[i];
                } else {
                    value += line[i];
                }
                ++i;
            }
            require(i < n, "record: unterminated quote in '" + line + "'", ErrorCode::io);
            ++i;
        } else {
            size_t sp = line.find(' ', i);
            if (sp == std::string::npos) sp = n;
            value = line.substr(i, sp - i);
            i = sp;
        }
        rec.set(key, value);
    }
    return rec;
}

void write_records(const std::string& path, const std::vector<Record>& records) {
    std::string out;
    for (const auto& r : records) {
        out += r.to_line();
        out += '\n';
    }
    write_text_file(path, out);
}

std::vector<Record> read_records(const std::string& path) {
    std::vector<Record> out;
    std::istringstream in(read_text_file(path));
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        out.push_back(Record::from_line(line));
    }
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), "cannot open file: " + path, ErrorCode::io);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    require(out.good(), "cannot write file: " + path, ErrorCode::io);
    out << content;
    require(out.good(), "write failed: " + path, ErrorCode::io);
}

} // namespace forge
