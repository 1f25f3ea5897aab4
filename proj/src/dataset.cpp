#include "ssmlp/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "ssmlp/rng.hpp"
#include "ssmlp/strings.hpp"

namespace ssmlp {

double as_number(const Value& v) {
    if (!std::holds_alternative<double>(v))
        throw std::logic_error("value is not numeric");
    return std::get<double>(v);
}

const std::string& as_token(const Value& v) {
    if (!std::holds_alternative<std::string>(v))
        throw std::logic_error("value is not a nominal token");
    return std::get<std::string>(v);
}

namespace {

bool in_vocabulary(const Attribute& attr, const std::string& token) {
    return std::find(attr.vocabulary.begin(), attr.vocabulary.end(), token) !=
           attr.vocabulary.end();
}

void validate_cell(const Attribute& attr, const Value& cell, std::size_t row_idx) {
    if (is_absent(cell)) {
        if (attr.role != AttrRole::label)
            throw std::invalid_argument("row " + std::to_string(row_idx) +
                                        ": attribute '" + attr.name +
                                        "' has a missing value");
        return;
    }
    if (attr.kind == AttrKind::numeric) {
        if (!std::holds_alternative<double>(cell))
            throw std::invalid_argument("row " + std::to_string(row_idx) +
                                        ": attribute '" + attr.name +
                                        "' expects a numeric value");
    } else {
        if (!std::holds_alternative<std::string>(cell))
            throw std::invalid_argument("row " + std::to_string(row_idx) +
                                        ": attribute '" + attr.name +
                                        "' expects a nominal token");
        if (!in_vocabulary(attr, std::get<std::string>(cell)))
            throw std::invalid_argument("row " + std::to_string(row_idx) + ": value '" +
                                        std::get<std::string>(cell) +
                                        "' is not in the vocabulary of attribute '" +
                                        attr.name + "'");
    }
}

} // namespace

ExampleSet::ExampleSet(std::vector<Attribute> schema, std::vector<Row> rows)
    : schema_(std::move(schema)), rows_(std::move(rows)) {
    std::size_t label_count = 0;
    for (std::size_t i = 0; i < schema_.size(); ++i) {
        const Attribute& attr = schema_[i];
        if (attr.name.empty())
            throw std::invalid_argument("attribute names must be nonempty");
        if (attr.role == AttrRole::label) {
            label_index_ = i;
            ++label_count;
        }
        if (attr.is_nominal() && attr.vocabulary.empty() && attr.role != AttrRole::label)
            throw std::invalid_argument("attribute '" + attr.name +
                                        "' is nominal but has an empty vocabulary");
        if (attr.kind == AttrKind::binary_nominal && attr.vocabulary.size() > 2)
            throw std::invalid_argument("attribute '" + attr.name +
                                        "' is binary but has more than two tokens");
    }
    if (label_count != 1)
        throw std::invalid_argument("schema must have exactly one label attribute");
    if (schema_[label_index_].kind == AttrKind::numeric)
        throw std::invalid_argument("label attribute must be token-valued");

    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r].size() != schema_.size())
            throw std::invalid_argument("row " + std::to_string(r) + " has " +
                                        std::to_string(rows_[r].size()) + " cells, expected " +
                                        std::to_string(schema_.size()));
        for (std::size_t c = 0; c < schema_.size(); ++c)
            validate_cell(schema_[c], rows_[r][c], r);
    }
}

std::vector<std::size_t> ExampleSet::regular_indices() const {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < schema_.size(); ++i)
        if (schema_[i].role == AttrRole::regular) idx.push_back(i);
    return idx;
}

const std::string& ExampleSet::label_of(std::size_t row) const {
    const Value& v = rows_.at(row)[label_index_];
    if (is_absent(v))
        throw std::invalid_argument("row " + std::to_string(row) + " has no label");
    return std::get<std::string>(v);
}

bool ExampleSet::all_labeled() const {
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (!has_label(i)) return false;
    return true;
}

ExampleSet ExampleSet::with_rows(std::vector<Row> rows) const {
    return ExampleSet(schema_, std::move(rows));
}

ExampleSet ExampleSet::with_label_vocabulary(std::vector<std::string> vocabulary) const {
    std::vector<Attribute> schema = schema_;
    Attribute& label = schema[label_index_];
    label.vocabulary = std::move(vocabulary);
    label.kind = label.vocabulary.size() == 2 ? AttrKind::binary_nominal : AttrKind::nominal;
    return ExampleSet(std::move(schema), rows_);
}

ExampleSet set_role(const ExampleSet& set, const std::string& attribute, AttrRole role) {
    std::vector<Attribute> schema = set.schema();
    auto it = std::find_if(schema.begin(), schema.end(),
                           [&](const Attribute& a) { return a.name == attribute; });
    if (it == schema.end())
        throw std::invalid_argument("set_role: no attribute named '" + attribute + "'");
    const std::size_t pos = static_cast<std::size_t>(it - schema.begin());
    if (pos == set.label_index() && role != AttrRole::label)
        throw std::invalid_argument(
            "set_role: cannot demote the label attribute; assign another label first");
    if (role == AttrRole::label) {
        if (it->kind == AttrKind::numeric)
            throw std::invalid_argument("set_role: label attribute must be token-valued");
        schema[set.label_index()].role = AttrRole::regular;
    }
    it->role = role;
    return ExampleSet(std::move(schema), set.rows());
}

ExampleSet load_csv(const std::filesystem::path& path, const std::string& label_column) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open file: " + path.string());

    std::string line;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> raw;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string probe = line;
        trim(probe);
        if (probe.empty()) continue;
        auto cells = split_csv_line(line);
        if (!have_header) {
            header = std::move(cells);
            have_header = true;
        } else {
            if (cells.size() != header.size())
                throw std::invalid_argument(
                    path.string() + ": row " + std::to_string(raw.size() + 1) + " has " +
                    std::to_string(cells.size()) + " cells, expected " +
                    std::to_string(header.size()));
            raw.push_back(std::move(cells));
        }
    }
    if (!have_header)
        throw std::invalid_argument(path.string() + ": file is empty");
    if (raw.empty())
        throw std::invalid_argument(path.string() + ": no data rows");

    {
        std::unordered_set<std::string> seen;
        for (const auto& name : header)
            if (!seen.insert(name).second)
                throw std::invalid_argument(path.string() + ": duplicate column '" + name + "'");
    }

    const auto label_it = std::find(header.begin(), header.end(), label_column);
    if (label_it == header.end())
        throw std::invalid_argument(path.string() + ": label column '" + label_column +
                                    "' not found");
    const std::size_t label_pos = static_cast<std::size_t>(label_it - header.begin());

    std::vector<Attribute> schema(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        Attribute& attr = schema[c];
        attr.name = header[c];
        attr.role = c == label_pos ? AttrRole::label : AttrRole::regular;

        bool all_numeric = true;
        std::vector<std::string> vocab;
        for (std::size_t r = 0; r < raw.size(); ++r) {
            const std::string& cell = raw[r][c];
            if (cell.empty()) {
                if (c != label_pos)
                    throw std::invalid_argument(path.string() + ": row " +
                                                std::to_string(r + 1) + " has a missing value in column '" +
                                                header[c] + "'");
                continue;
            }
            if (all_numeric && !parse_number(cell)) all_numeric = false;
            if (std::find(vocab.begin(), vocab.end(), cell) == vocab.end())
                vocab.push_back(cell);
        }
        // The label column keeps its tokens as class names even when they
        // happen to look numeric.
        if (c != label_pos && all_numeric) {
            attr.kind = AttrKind::numeric;
        } else {
            attr.kind = vocab.size() == 2 ? AttrKind::binary_nominal : AttrKind::nominal;
            attr.vocabulary = std::move(vocab);
        }
    }

    std::vector<Row> rows(raw.size());
    for (std::size_t r = 0; r < raw.size(); ++r) {
        Row row(header.size());
        for (std::size_t c = 0; c < header.size(); ++c) {
            const std::string& cell = raw[r][c];
            if (cell.empty())
                row[c] = std::monostate{};
            else if (schema[c].kind == AttrKind::numeric)
                row[c] = *parse_number(cell);
            else
                row[c] = cell;
        }
        rows[r] = std::move(row);
    }
    return ExampleSet(std::move(schema), std::move(rows));
}

void write_csv(const std::filesystem::path& path, const ExampleSet& set) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write file: " + path.string());
    const auto& schema = set.schema();
    for (std::size_t c = 0; c < schema.size(); ++c)
        out << (c ? "," : "") << schema[c].name;
    out << "\n";
    for (const Row& row : set.rows()) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out << ",";
            if (is_absent(row[c]))
                continue;
            if (std::holds_alternative<double>(row[c]))
                out << to_decimal_string(std::get<double>(row[c]));
            else
                out << std::get<std::string>(row[c]);
        }
        out << "\n";
    }
    if (!out)
        throw std::runtime_error("failed writing file: " + path.string());
}

namespace {

// Seeded shuffle of 0..n-1; the first `take` indices form the selected part.
// Both parts keep ascending order so outputs preserve input row order.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>>
pick_indices(std::size_t n, std::size_t take, std::uint64_t seed) {
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    Rng rng(seed);
    rng.shuffle(idx);
    std::vector<std::size_t> picked(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(take));
    std::vector<std::size_t> rest(idx.begin() + static_cast<std::ptrdiff_t>(take), idx.end());
    std::sort(picked.begin(), picked.end());
    std::sort(rest.begin(), rest.end());
    return {std::move(picked), std::move(rest)};
}

std::vector<Row> gather(const ExampleSet& set, const std::vector<std::size_t>& idx) {
    std::vector<Row> rows;
    rows.reserve(idx.size());
    for (std::size_t i : idx) rows.push_back(set.row(i));
    return rows;
}

} // namespace

std::pair<ExampleSet, ExampleSet> split_random(const ExampleSet& set, const SplitSpec& spec) {
    if (set.size() < 2)
        throw std::invalid_argument("split_random: need at least 2 rows");
    if (!(spec.test_fraction > 0.0 && spec.test_fraction < 1.0))
        throw std::invalid_argument("split_random: test_fraction must be in (0, 1)");
    const auto test_count =
        static_cast<std::size_t>(spec.test_fraction * static_cast<double>(set.size()));
    auto [test_idx, train_idx] = pick_indices(set.size(), test_count, spec.seed);
    return {set.with_rows(gather(set, train_idx)), set.with_rows(gather(set, test_idx))};
}

LabeledSplit split_labeled_unlabeled(const ExampleSet& train, std::size_t labeled_count,
                                     std::uint64_t seed) {
    if (labeled_count == 0 || labeled_count > train.size())
        throw std::invalid_argument("split_labeled_unlabeled: labeled_count out of range");
    if (!train.all_labeled())
        throw std::invalid_argument("split_labeled_unlabeled: every train row must be labeled");

    auto [labeled_idx, rest_idx] = pick_indices(train.size(), labeled_count, seed);

    std::vector<Row> unlabeled_rows;
    std::vector<std::string> hidden;
    unlabeled_rows.reserve(rest_idx.size());
    hidden.reserve(rest_idx.size());
    const std::size_t label_col = train.label_index();
    for (std::size_t i : rest_idx) {
        Row row = train.row(i);
        hidden.push_back(std::get<std::string>(row[label_col]));
        row[label_col] = std::monostate{};
        unlabeled_rows.push_back(std::move(row));
    }
    return {train.with_rows(gather(train, labeled_idx)),
            train.with_rows(std::move(unlabeled_rows)), std::move(hidden)};
}

ExampleSet generate_synthetic(std::size_t n, std::size_t d, double class_separation,
                              std::uint64_t seed) {
    if (n < 2)
        throw std::invalid_argument("generate_synthetic: n must be at least 2");
    if (d < 1)
        throw std::invalid_argument("generate_synthetic: d must be at least 1");
    if (class_separation < 0.0)
        throw std::invalid_argument("generate_synthetic: class_separation must be nonnegative");

    std::vector<Attribute> schema;
    schema.reserve(d + 1);
    for (std::size_t j = 0; j < d; ++j)
        schema.push_back({"x" + std::to_string(j + 1), AttrKind::numeric, AttrRole::regular, {}});
    schema.push_back({"class", AttrKind::binary_nominal, AttrRole::label, {"neg", "pos"}});

    const std::size_t n_neg = n - n / 2;
    Rng rng(seed);
    std::vector<Row> rows;
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const bool positive = i >= n_neg;
        const double mean = (positive ? 0.5 : -0.5) * class_separation;
        Row row(d + 1);
        for (std::size_t j = 0; j < d; ++j) row[j] = mean + rng.normal();
        row[d] = std::string(positive ? "pos" : "neg");
        rows.push_back(std::move(row));
    }
    return ExampleSet(std::move(schema), std::move(rows));
}

ExampleSet concat(const ExampleSet& a, const ExampleSet& b) {
    const auto& sa = a.schema();
    const auto& sb = b.schema();
    if (sa.size() != sb.size())
        throw std::invalid_argument("concat: schemas have different widths");

    std::vector<Attribute> schema(sa.size());
    for (std::size_t c = 0; c < sa.size(); ++c) {
        if (sa[c].name != sb[c].name || sa[c].role != sb[c].role)
            throw std::invalid_argument("concat: attribute " + std::to_string(c) +
                                        " differs in name or role");
        const bool tok_a = sa[c].is_nominal();
        const bool tok_b = sb[c].is_nominal();
        if (tok_a != tok_b)
            throw std::invalid_argument("concat: attribute '" + sa[c].name +
                                        "' mixes numeric and nominal kinds");
        Attribute attr = sa[c];
        if (tok_a) {
            for (const auto& tok : sb[c].vocabulary)
                if (std::find(attr.vocabulary.begin(), attr.vocabulary.end(), tok) ==
                    attr.vocabulary.end())
                    attr.vocabulary.push_back(tok);
            attr.kind =
                attr.vocabulary.size() == 2 ? AttrKind::binary_nominal : AttrKind::nominal;
        }
        schema[c] = std::move(attr);
    }

    std::vector<Row> rows = a.rows();
    rows.insert(rows.end(), b.rows().begin(), b.rows().end());
    return ExampleSet(std::move(schema), std::move(rows));
}

} // namespace ssmlp
