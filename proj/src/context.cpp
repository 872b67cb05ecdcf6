#include "fca/context.hpp"

#include <charconv>
#include <unordered_map>
#include <unordered_set>

#include "fca/errors.hpp"

namespace fca {

namespace {

void require_unique(const std::vector<std::string>& names, const char* what) {
  std::unordered_set<std::string> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second) throw InputError(std::string("duplicate ") + what + " name '" + n + "'");
  }
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::size_t parse_count(std::string_view s, const char* what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw InputError(std::string("malformed header: ") + what + " '" + std::string(s) + "'");
  return value;
}

// RFC-4180-ish field splitting: commas, double-quoted fields, "" escapes.
std::vector<std::string> split_csv_record(std::string_view line, std::size_t line_no) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (quoted) throw InputError("line " + std::to_string(line_no) + ": unterminated quoted field");
  fields.push_back(std::move(cur));
  return fields;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

FormalContext::FormalContext(std::vector<std::string> object_names, std::vector<std::string> attribute_names,
                             std::vector<AttrSet> rows)
    : object_names_(std::move(object_names)), attribute_names_(std::move(attribute_names)), rows_(std::move(rows)) {
  if (attribute_names_.size() > AttrSet::kCapacity)
    throw CapacityError("context has " + std::to_string(attribute_names_.size()) + " attributes; at most " +
                        std::to_string(AttrSet::kCapacity) + " are supported");
  if (rows_.size() != object_names_.size())
    throw InputError("row count " + std::to_string(rows_.size()) + " does not match object count " +
                     std::to_string(object_names_.size()));
  require_unique(object_names_, "object");
  require_unique(attribute_names_, "attribute");
  const AttrSet universe = all_attributes();
  columns_.assign(attribute_names_.size(), ObjSet(rows_.size()));
  for (std::size_t g = 0; g < rows_.size(); ++g) {
    if (!rows_[g].subset_of(universe))
      throw InputError("row of object '" + object_names_[g] + "' has bits beyond the attribute range");
    rows_[g].for_each([&](std::size_t m) { columns_[m].set(g); });
  }
}

std::size_t FormalContext::cross_count() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.count();
  return n;
}

double FormalContext::density() const {
  const std::size_t cells = num_objects() * num_attributes();
  return cells == 0 ? 0.0 : static_cast<double>(cross_count()) / static_cast<double>(cells);
}

std::string FormalContext::format(const AttrSet& s) const {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t m) {
    if (!first) out += ", ";
    first = false;
    out += m < attribute_names_.size() ? attribute_names_[m] : "#" + std::to_string(m);
  });
  return out + "}";
}

AttrSet FormalContext::attrs(const std::vector<std::string>& names) const {
  AttrSet s;
  for (const auto& n : names) {
    std::size_t m = 0;
    while (m < attribute_names_.size() && attribute_names_[m] != n) ++m;
    if (m == attribute_names_.size()) throw InputError("unknown attribute '" + n + "'");
    s.set(m);
  }
  return s;
}

ObjSet extent(const FormalContext& ctx, const AttrSet& attrs) {
  ObjSet result(ctx.num_objects(), true);
  attrs.for_each([&](std::size_t m) { result &= ctx.column(m); });
  return result;
}

AttrSet intent_of(const FormalContext& ctx, const ObjSet& objects) {
  AttrSet result = ctx.all_attributes();
  objects.for_each([&](std::size_t g) { result &= ctx.row(g); });
  return result;
}

AttrSet closure(const FormalContext& ctx, const AttrSet& attrs) {
  AttrSet result = ctx.all_attributes();
  for (const auto& r : ctx.rows()) {
    if (attrs.subset_of(r)) result &= r;
  }
  return result;
}

std::size_t support(const FormalContext& ctx, const AttrSet& attrs) {
  std::size_t n = 0;
  for (const auto& r : ctx.rows()) n += attrs.subset_of(r);
  return n;
}

ClarifiedContext clarify_rows(const FormalContext& ctx) {
  std::unordered_map<AttrSet, std::size_t> index;
  std::vector<std::string> names;
  std::vector<AttrSet> rows;
  ClarifiedContext out;
  for (std::size_t g = 0; g < ctx.num_objects(); ++g) {
    auto [it, inserted] = index.try_emplace(ctx.row(g), rows.size());
    if (inserted) {
      names.push_back(ctx.object_names()[g]);
      rows.push_back(ctx.row(g));
      out.multiplicities.push_back(1);
      out.merged_names.push_back({ctx.object_names()[g]});
    } else {
      ++out.multiplicities[it->second];
      out.merged_names[it->second].push_back(ctx.object_names()[g]);
    }
  }
  out.context = FormalContext(std::move(names), ctx.attribute_names(), std::move(rows));
  return out;
}

FormalContext parse_burmeister(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.size() < 5 || lines[0] != "B") throw InputError("malformed header: expected 'B' on the first line");
  // Line 2 conventionally holds an (often empty) context name; it is ignored.
  const std::size_t n_obj = parse_count(lines[2], "object count");
  const std::size_t n_attr = parse_count(lines[3], "attribute count");
  if (!lines[4].empty()) throw InputError("malformed header: expected a blank fifth line");
  if (n_attr > AttrSet::kCapacity)
    throw CapacityError("context declares " + std::to_string(n_attr) + " attributes; at most " +
                        std::to_string(AttrSet::kCapacity) + " are supported");

  const std::size_t body = 5;
  const std::size_t expected = body + n_obj + n_attr + n_obj;
  if (lines.size() < expected)
    throw InputError("count mismatch: expected " + std::to_string(expected) + " lines, found " +
                     std::to_string(lines.size()));
  for (std::size_t i = expected; i < lines.size(); ++i) {
    if (!lines[i].empty()) throw InputError("count mismatch: unexpected content after the incidence rows");
  }

  std::vector<std::string> objects, attributes;
  for (std::size_t i = 0; i < n_obj; ++i) objects.emplace_back(lines[body + i]);
  for (std::size_t i = 0; i < n_attr; ++i) attributes.emplace_back(lines[body + n_obj + i]);

  std::vector<AttrSet> rows(n_obj);
  for (std::size_t g = 0; g < n_obj; ++g) {
    const auto line = lines[body + n_obj + n_attr + g];
    if (line.size() != n_attr)
      throw InputError("count mismatch: incidence row " + std::to_string(g + 1) + " has " +
                       std::to_string(line.size()) + " cells, expected " + std::to_string(n_attr));
    for (std::size_t m = 0; m < n_attr; ++m) {
      if (line[m] == 'X')
        rows[g].set(m);
      else if (line[m] != '.')
        throw InputError("incidence row " + std::to_string(g + 1) + ": invalid character '" +
                         std::string(1, line[m]) + "'");
    }
  }
  return FormalContext(std::move(objects), std::move(attributes), std::move(rows));
}

std::string write_burmeister(const FormalContext& ctx) {
  std::string out = "B\n\n";
  out += std::to_string(ctx.num_objects()) + "\n" + std::to_string(ctx.num_attributes()) + "\n\n";
  for (const auto& n : ctx.object_names()) out += n + "\n";
  for (const auto& n : ctx.attribute_names()) out += n + "\n";
  for (const auto& r : ctx.rows()) {
    for (std::size_t m = 0; m < ctx.num_attributes(); ++m) out.push_back(r.test(m) ? 'X' : '.');
    out.push_back('\n');
  }
  return out;
}

FormalContext parse_dense_csv(std::string_view text, std::optional<std::size_t> max_attrs,
                              std::size_t label_columns) {
  if (label_columns == 0) throw InputError("at least one label column is required");
  auto lines = split_lines(text);
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw InputError("empty CSV: missing header row");

  const auto header = split_csv_record(lines[0], 1);
  if (header.size() < label_columns) throw InputError("header has fewer columns than label columns");
  const std::size_t data_cols = header.size() - label_columns;
  const std::size_t keep = max_attrs ? std::min(*max_attrs, data_cols) : data_cols;
  if (keep > AttrSet::kCapacity)
    throw CapacityError("CSV keeps " + std::to_string(keep) + " attributes; at most " +
                        std::to_string(AttrSet::kCapacity) + " are supported");

  std::vector<std::string> attributes(header.begin() + static_cast<std::ptrdiff_t>(label_columns),
                                      header.begin() + static_cast<std::ptrdiff_t>(label_columns + keep));
  std::vector<std::string> objects;
  std::vector<AttrSet> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = split_csv_record(lines[i], i + 1);
    if (fields.size() != header.size())
      throw InputError("line " + std::to_string(i + 1) + ": ragged row with " + std::to_string(fields.size()) +
                       " fields, header has " + std::to_string(header.size()));
    AttrSet row;
    for (std::size_t c = 0; c < data_cols; ++c) {
      const auto& cell = fields[label_columns + c];
      if (cell != "0" && cell != "1")
        throw InputError("line " + std::to_string(i + 1) + ": non-binary cell '" + cell + "' in column '" +
                         header[label_columns + c] + "'");
      if (c < keep && cell == "1") row.set(c);
    }
    objects.push_back(fields[0]);
    rows.push_back(row);
  }
  return FormalContext(std::move(objects), std::move(attributes), std::move(rows));
}

std::string write_dense_csv(const FormalContext& ctx) {
  std::string out = "id";
  for (const auto& a : ctx.attribute_names()) out += "," + csv_escape(a);
  out += "\n";
  for (std::size_t g = 0; g < ctx.num_objects(); ++g) {
    out += csv_escape(ctx.object_names()[g]);
    for (std::size_t m = 0; m < ctx.num_attributes(); ++m) out += ctx.incident(g, m) ? ",1" : ",0";
    out += "\n";
  }
  return out;
}

}  // namespace fca
