#ifndef SYDLAB_DIAGRAM_HPP
#define SYDLAB_DIAGRAM_HPP

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include <sydlab/partition.hpp>

namespace sydlab {

enum class Sign { Plus, Minus };

// All rows of one length: `plus` of them start with +, `minus` with -.
struct Row {
    int length = 0;
    int plus = 0;
    int minus = 0;

    int count() const { return plus + minus; }
    friend auto operator<=>(const Row&, const Row&) = default;
};

// Signs alternate along each row. Canonical form: lengths strictly
// decreasing, every listed length has at least one row.
class SignedYoungDiagram {
public:
    SignedYoungDiagram() = default;
    // Rows may repeat lengths or be empty; they are merged and sorted.
    explicit SignedYoungDiagram(std::vector<Row> rows);
    static SignedYoungDiagram from_signed_rows(const std::vector<std::pair<int, Sign>>& rows);

    const std::vector<Row>& rows() const { return rows_; }
    bool empty() const { return rows_.empty(); }
    int plus_boxes() const { return plus_boxes_; }
    int minus_boxes() const { return minus_boxes_; }
    std::pair<int, int> signature() const { return {plus_boxes_, minus_boxes_}; }
    int size() const { return plus_boxes_ + minus_boxes_; }
    int row_count() const;
    Partition shape() const;
    // gcd of all row lengths; 0 for the empty diagram.
    int length_gcd() const;
    bool all_lengths_even() const;
    bool all_lengths_odd() const;
    // Every length carries rows of one starting sign only.
    bool single_signed() const;
    // Every length has as many + rows as - rows.
    bool balanced() const;

    SignedYoungDiagram sign_swapped() const;

    friend auto operator<=>(const SignedYoungDiagram& a, const SignedYoungDiagram& b) { return a.rows_ <=> b.rows_; }
    friend bool operator==(const SignedYoungDiagram& a, const SignedYoungDiagram& b) { return a.rows_ == b.rows_; }

private:
    std::vector<Row> rows_;
    int plus_boxes_ = 0;
    int minus_boxes_ = 0;
};

enum class Decoration { None, I, II };

// Decoration is set only on very even BDI diagrams with p = q.
struct OrbitLabel {
    SignedYoungDiagram diagram;
    Decoration decoration = Decoration::None;

    friend auto operator<=>(const OrbitLabel&, const OrbitLabel&) = default;
};

// Box signature of `count` rows of `length` starting with `start`.
std::pair<int, int> row_signature(int length, Sign start, int count = 1);

SignedYoungDiagram join_diagrams(const SignedYoungDiagram& a, const SignedYoungDiagram& b);

// 1^a_+ 1^b_-.
SignedYoungDiagram ones(int plus, int minus);

// Smaller of d and its sign swap.
SignedYoungDiagram swap_canonical(const SignedYoungDiagram& d);

std::string decoration_name(Decoration d);

// "3+ 1+ 1-", "empty"; decorated labels append " | decor=I".
std::string to_text(const SignedYoungDiagram& d);
std::string to_text(const OrbitLabel& label);
// Inverse of to_text; throws std::invalid_argument.
OrbitLabel parse_label(const std::string& text);

} // namespace sydlab

#endif
