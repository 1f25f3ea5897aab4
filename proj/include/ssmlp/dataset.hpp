#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ssmlp {

// Tabular data with an attribute schema, in the spirit of an example set:
// every attribute has a kind (numeric or token-valued) and a role, and
// exactly one attribute per schema is the label. Rows may omit the label
// value, which is how the unlabeled pool is represented.

enum class AttrKind { numeric, binary_nominal, nominal };
enum class AttrRole { regular, label, id };

struct Attribute {
    std::string name;
    AttrKind kind = AttrKind::numeric;
    AttrRole role = AttrRole::regular;
    // Legal tokens for nominal kinds, in order of first appearance.
    // May be empty only for a label attribute whose values are all absent.
    std::vector<std::string> vocabulary;

    bool is_nominal() const { return kind != AttrKind::numeric; }
    bool operator==(const Attribute&) const = default;
};

// A cell value: absent (legal only in the label column), a number, or a
// nominal token.
using Value = std::variant<std::monostate, double, std::string>;
using Row = std::vector<Value>;

inline bool is_absent(const Value& v) { return std::holds_alternative<std::monostate>(v); }
double as_number(const Value& v);
const std::string& as_token(const Value& v);

// Immutable after construction; the constructor enforces the schema
// invariants (one label attribute, row widths, vocabulary membership).
class ExampleSet {
public:
    ExampleSet(std::vector<Attribute> schema, std::vector<Row> rows);

    const std::vector<Attribute>& schema() const { return schema_; }
    const std::vector<Row>& rows() const { return rows_; }
    std::size_t size() const { return rows_.size(); }
    std::size_t num_attributes() const { return schema_.size(); }
    const Row& row(std::size_t i) const { return rows_.at(i); }

    std::size_t label_index() const { return label_index_; }
    const Attribute& label_attribute() const { return schema_[label_index_]; }
    // Class names = the label attribute's vocabulary.
    const std::vector<std::string>& class_names() const { return schema_[label_index_].vocabulary; }

    // Positions of role-regular attributes, in schema order. These are the
    // columns learners see as features.
    std::vector<std::size_t> regular_indices() const;

    bool has_label(std::size_t row) const { return !is_absent(rows_[row][label_index_]); }
    const std::string& label_of(std::size_t row) const; // throws if absent
    bool all_labeled() const;

    // Same schema, different rows (rows are validated again).
    ExampleSet with_rows(std::vector<Row> rows) const;
    // Replaces the label vocabulary; every present label must be covered.
    ExampleSet with_label_vocabulary(std::vector<std::string> vocabulary) const;

private:
    std::vector<Attribute> schema_;
    std::vector<Row> rows_;
    std::size_t label_index_ = 0;
};

// Reassigns an attribute's role. Assigning label moves the previous label
// attribute back to regular; the new label must be token-valued. The
// current label cannot be demoted directly (a schema always keeps one).
ExampleSet set_role(const ExampleSet& set, const std::string& attribute, AttrRole role);

struct SplitSpec {
    double test_fraction = 0.3; // strictly inside (0, 1)
    std::uint64_t seed = 0;
};

// Loads a comma-separated file: first row headers, UTF-8, empty cell =
// absent value (legal only in the label column). Column kinds are inferred:
// all cells parseable as numbers -> numeric; exactly two distinct tokens ->
// binary_nominal; otherwise nominal. The label column is always treated as
// token-valued so class names survive end to end.
ExampleSet load_csv(const std::filesystem::path& path, const std::string& label_column);

void write_csv(const std::filesystem::path& path, const ExampleSet& set);

// Seeded random partition; test gets floor(test_fraction * n) rows, the
// remainder trains. Row order within each part follows the input.
std::pair<ExampleSet, ExampleSet> split_random(const ExampleSet& set, const SplitSpec& spec);

struct LabeledSplit {
    ExampleSet labeled;
    ExampleSet unlabeled; // label cells absent
    // Ground truth of the unlabeled rows, same order. Kept outside the
    // ExampleSet handed to learners; for post-hoc evaluation only.
    std::vector<std::string> hidden_labels;
};

LabeledSplit split_labeled_unlabeled(const ExampleSet& train, std::size_t labeled_count,
                                     std::uint64_t seed);

// Two-class synthetic data: d spherical unit-variance Gaussian features with
// per-coordinate means -separation/2 (class "neg") and +separation/2
// (class "pos"); class counts differ by at most one.
ExampleSet generate_synthetic(std::size_t n, std::size_t d, double class_separation,
                              std::uint64_t seed);

// Row-wise concatenation. Attribute names and roles must agree; token and
// numeric kinds never mix. Token vocabularies are merged in first-appearance
// order and the kind is re-derived from the merged vocabulary size.
ExampleSet concat(const ExampleSet& a, const ExampleSet& b);

} // namespace ssmlp
