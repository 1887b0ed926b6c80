#pragma once

#include <string>
#include <vector>

#include "besent/chat.hpp"

namespace besent {

enum class DatasetFormat { jsonl, csv };

std::optional<DatasetFormat> parse_dataset_format(const std::string& name);

// JSONL: one object per line with keys id, forum_type, parent_id?, author_id?,
// subject_id?, text, timestamp?, sentiment?, bloom?. CSV: same column names,
// header row required, UTF-8, RFC-4180 quoting. Errors name the line (JSONL)
// or record (CSV) and the offending field; the loaded dataset is validated
// (unique ids, reply/parent structure, non-blank text).
std::vector<ChatRecord> load_dataset(const std::string& path, DatasetFormat format);

void save_dataset(const std::string& path, const std::vector<ChatRecord>& records,
                  DatasetFormat format);

std::string dataset_to_string(const std::vector<ChatRecord>& records, DatasetFormat format);
std::vector<ChatRecord> dataset_from_string(const std::string& content, DatasetFormat format,
                                            const std::string& origin = "<memory>");

// Annotation files are JSONL: {"chat_id":, "annotator_id":, "sentiment":, "bloom":}.
// annotator_ids keeps first-appearance order.
AnnotationSet load_annotations(const std::string& path);
AnnotationSet annotations_from_string(const std::string& content,
                                      const std::string& origin = "<memory>");

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace besent
