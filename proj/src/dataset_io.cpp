#include "besent/dataset_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "besent/error.hpp"

namespace besent {

namespace {

using ordered_json = nlohmann::ordered_json;

const std::vector<std::string> kCsvColumns = {
    "id", "forum_type", "parent_id", "author_id", "subject_id",
    "text", "timestamp", "sentiment", "bloom"};

std::optional<std::string> non_empty(std::string value) {
    if (value.empty()) return std::nullopt;
    return value;
}

std::string require_string(const ordered_json& obj, const char* key, std::size_t line) {
    if (!obj.contains(key)) {
        throw FormatError("line " + std::to_string(line) + ": missing field '" + key + "'");
    }
    if (!obj.at(key).is_string()) {
        throw FormatError("line " + std::to_string(line) + ": field '" + key +
                          "' is not a string");
    }
    return obj.at(key).get<std::string>();
}

std::optional<std::string> optional_string(const ordered_json& obj, const char* key,
                                           std::size_t line) {
    if (!obj.contains(key) || obj.at(key).is_null()) return std::nullopt;
    if (!obj.at(key).is_string()) {
        throw FormatError("line " + std::to_string(line) + ": field '" + key +
                          "' is not a string");
    }
    return non_empty(obj.at(key).get<std::string>());
}

ChatRecord record_from_fields(
    const std::string& id, const std::string& forum_type,
    std::optional<std::string> parent_id, std::optional<std::string> author_id,
    std::optional<std::string> subject_id, const std::string& text,
    std::optional<std::string> timestamp, std::optional<std::string> sentiment,
    std::optional<std::string> bloom, std::size_t where) {
    ChatRecord rec;
    rec.chat.id = id;
    auto ft = parse_forum_type(forum_type);
    if (!ft) {
        throw FormatError("line " + std::to_string(where) +
                          ": field 'forum_type' has invalid value '" + forum_type + "'");
    }
    rec.chat.forum_type = *ft;
    rec.chat.parent_id = std::move(parent_id);
    rec.chat.author_id = std::move(author_id);
    rec.chat.subject_id = std::move(subject_id);
    rec.chat.text = text;
    rec.chat.timestamp = std::move(timestamp);
    if (sentiment) {
        auto s = parse_sentiment(*sentiment);
        if (!s) {
            throw FormatError("line " + std::to_string(where) +
                              ": field 'sentiment' has invalid value '" + *sentiment + "'");
        }
        rec.sentiment = s;
    }
    if (bloom) {
        auto b = parse_bloom(*bloom);
        if (!b) {
            throw FormatError("line " + std::to_string(where) +
                              ": field 'bloom' has invalid value '" + *bloom + "'");
        }
        rec.bloom = b;
    }
    return rec;
}

std::vector<ChatRecord> parse_jsonl(const std::string& content) {
    std::vector<ChatRecord> records;
    std::istringstream in(content);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim_whitespace(line).empty()) continue;
        ordered_json obj;
        try {
            obj = ordered_json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw FormatError("line " + std::to_string(lineno) + ": invalid JSON (" +
                              std::string(e.what()) + ")");
        }
        if (!obj.is_object()) {
            throw FormatError("line " + std::to_string(lineno) + ": record is not an object");
        }
        records.push_back(record_from_fields(
            require_string(obj, "id", lineno), require_string(obj, "forum_type", lineno),
            optional_string(obj, "parent_id", lineno), optional_string(obj, "author_id", lineno),
            optional_string(obj, "subject_id", lineno), require_string(obj, "text", lineno),
            optional_string(obj, "timestamp", lineno), optional_string(obj, "sentiment", lineno),
            optional_string(obj, "bloom", lineno), lineno));
    }
    return records;
}

std::string jsonl_line(const ChatRecord& rec) {
    ordered_json obj;
    obj["id"] = rec.chat.id;
    obj["forum_type"] = to_string(rec.chat.forum_type);
    if (rec.chat.parent_id) obj["parent_id"] = *rec.chat.parent_id;
    if (rec.chat.author_id) obj["author_id"] = *rec.chat.author_id;
    if (rec.chat.subject_id) obj["subject_id"] = *rec.chat.subject_id;
    obj["text"] = rec.chat.text;
    if (rec.chat.timestamp) obj["timestamp"] = *rec.chat.timestamp;
    if (rec.sentiment) obj["sentiment"] = to_string(*rec.sentiment);
    if (rec.bloom) obj["bloom"] = to_string(*rec.bloom);
    return obj.dump();
}

// RFC-4180 style CSV with multi-line quoted fields. Each parsed record keeps
// the line number it started on.
struct CsvRecord {
    std::vector<std::string> fields;
    std::size_t line = 0;
};

std::vector<CsvRecord> parse_csv(const std::string& content) {
    std::vector<CsvRecord> records;
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    bool any = false;
    std::size_t lineno = 1;
    std::size_t record_line = 1;

    auto end_field = [&] {
        fields.push_back(field);
        field.clear();
    };
    auto end_record = [&] {
        end_field();
        records.push_back({fields, record_line});
        fields.clear();
        any = false;
    };

    for (std::size_t i = 0; i < content.size(); ++i) {
        const char c = content[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < content.size() && content[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                if (c == '\n') ++lineno;
                field.push_back(c);
            }
            continue;
        }
        switch (c) {
            case '"':
                quoted = true;
                any = true;
                break;
            case ',':
                end_field();
                any = true;
                break;
            case '\r':
                break;
            case '\n':
                if (any || !field.empty() || !fields.empty()) end_record();
                ++lineno;
                record_line = lineno;
                break;
            default:
                field.push_back(c);
                any = true;
                break;
        }
    }
    if (quoted) {
        throw FormatError("line " + std::to_string(record_line) + ": unterminated quoted field");
    }
    if (any || !field.empty() || !fields.empty()) end_record();
    return records;
}

std::string csv_escape(const std::string& value) {
    if (value.find_first_of(",\"\r\n") == std::string::npos) return value;
    std::string out = "\"";
    for (char c : value) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += "\"";
    return out;
}

std::vector<ChatRecord> parse_csv_dataset(const std::string& content) {
    const auto rows = parse_csv(content);
    if (rows.empty()) return {};
    const auto& header = rows.front().fields;
    std::vector<int> col(kCsvColumns.size(), -1);
    for (std::size_t i = 0; i < kCsvColumns.size(); ++i) {
        for (std::size_t j = 0; j < header.size(); ++j) {
            if (header[j] == kCsvColumns[i]) {
                col[i] = static_cast<int>(j);
                break;
            }
        }
    }
    for (std::size_t i = 0; i < kCsvColumns.size(); ++i) {
        // Label columns are optional; the rest of the header is mandatory.
        if (col[i] < 0 && kCsvColumns[i] != "sentiment" && kCsvColumns[i] != "bloom") {
            throw FormatError("line " + std::to_string(rows.front().line) +
                              ": missing CSV column '" + kCsvColumns[i] + "'");
        }
    }
    auto get = [&](const CsvRecord& row, std::size_t column) -> std::string {
        if (col[column] < 0) return "";
        const auto idx = static_cast<std::size_t>(col[column]);
        if (idx >= row.fields.size()) {
            throw FormatError("line " + std::to_string(row.line) + ": missing field '" +
                              kCsvColumns[column] + "'");
        }
        return row.fields[idx];
    };

    std::vector<ChatRecord> records;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        records.push_back(record_from_fields(
            get(row, 0), get(row, 1), non_empty(get(row, 2)), non_empty(get(row, 3)),
            non_empty(get(row, 4)), get(row, 5), non_empty(get(row, 6)),
            non_empty(get(row, 7)), non_empty(get(row, 8)), row.line));
    }
    return records;
}

std::string csv_dataset(const std::vector<ChatRecord>& records) {
    std::ostringstream out;
    for (std::size_t i = 0; i < kCsvColumns.size(); ++i) {
        if (i) out << ',';
        out << kCsvColumns[i];
    }
    out << '\n';
    for (const auto& rec : records) {
        const std::string row[9] = {
            rec.chat.id,
            to_string(rec.chat.forum_type),
            rec.chat.parent_id.value_or(""),
            rec.chat.author_id.value_or(""),
            rec.chat.subject_id.value_or(""),
            rec.chat.text,
            rec.chat.timestamp.value_or(""),
            rec.sentiment ? to_string(*rec.sentiment) : "",
            rec.bloom ? to_string(*rec.bloom) : "",
        };
        for (std::size_t i = 0; i < 9; ++i) {
            if (i) out << ',';
            out << csv_escape(row[i]);
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace

std::optional<DatasetFormat> parse_dataset_format(const std::string& name) {
    if (name == "jsonl") return DatasetFormat::jsonl;
    if (name == "csv") return DatasetFormat::csv;
    return std::nullopt;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("failed reading '" + path + "'");
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw IoError("failed writing '" + path + "'");
}

std::vector<ChatRecord> dataset_from_string(const std::string& content, DatasetFormat format,
                                            const std::string& origin) {
    std::vector<ChatRecord> records;
    try {
        records = format == DatasetFormat::jsonl ? parse_jsonl(content)
                                                 : parse_csv_dataset(content);
        validate_chats(records);
    } catch (const FormatError& e) {
        throw FormatError(origin + ": " + e.what());
    } catch (const ValidationError& e) {
        throw ValidationError(origin + ": " + e.what());
    }
    return records;
}

std::vector<ChatRecord> load_dataset(const std::string& path, DatasetFormat format) {
    return dataset_from_string(read_text_file(path), format, path);
}

std::string dataset_to_string(const std::vector<ChatRecord>& records, DatasetFormat format) {
    if (format == DatasetFormat::csv) return csv_dataset(records);
    std::string out;
    for (const auto& rec : records) {
        out += jsonl_line(rec);
        out += '\n';
    }
    return out;
}

void save_dataset(const std::string& path, const std::vector<ChatRecord>& records,
                  DatasetFormat format) {
    write_text_file(path, dataset_to_string(records, format));
}

AnnotationSet annotations_from_string(const std::string& content, const std::string& origin) {
    AnnotationSet set;
    std::istringstream in(content);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim_whitespace(line).empty()) continue;
        ordered_json obj;
        try {
            obj = ordered_json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw FormatError(origin + ": line " + std::to_string(lineno) + ": invalid JSON (" +
                              std::string(e.what()) + ")");
        }
        Annotation a;
        a.chat_id = require_string(obj, "chat_id", lineno);
        a.annotator_id = require_string(obj, "annotator_id", lineno);
        const std::string s = require_string(obj, "sentiment", lineno);
        const std::string b = require_string(obj, "bloom", lineno);
        auto sent = parse_sentiment(s);
        if (!sent) {
            throw FormatError(origin + ": line " + std::to_string(lineno) +
                              ": field 'sentiment' has invalid value '" + s + "'");
        }
        auto bloom = parse_bloom(b);
        if (!bloom) {
            throw FormatError(origin + ": line " + std::to_string(lineno) +
                              ": field 'bloom' has invalid value '" + b + "'");
        }
        a.sentiment = *sent;
        a.bloom = *bloom;
        if (std::find(set.annotator_ids.begin(), set.annotator_ids.end(), a.annotator_id) ==
            set.annotator_ids.end()) {
            set.annotator_ids.push_back(a.annotator_id);
        }
        set.annotations.push_back(std::move(a));
    }
    set.validate();
    return set;
}

AnnotationSet load_annotations(const std::string& path) {
    return annotations_from_string(read_text_file(path), path);
}

}  // namespace besent
