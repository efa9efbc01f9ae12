#ifndef COBINV_ALPHABET_HPP
#define COBINV_ALPHABET_HPP

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace cobinv {

struct Symbol {
    std::string name;
    int degree = 0;
    bool laurent = false;  // negative exponents permitted

    bool operator==(const Symbol&) const = default;
};

// Ordered list of symbols; a polynomial's exponent vectors index into this.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<Symbol> symbols);

    std::size_t size() const { return symbols_.size(); }
    const Symbol& at(std::size_t i) const { return symbols_[i]; }
    const std::vector<Symbol>& symbols() const { return symbols_; }
    std::optional<std::size_t> find(const std::string& name) const;
    std::size_t require(const std::string& name) const;

    bool operator==(const Alphabet& o) const { return symbols_ == o.symbols_; }

private:
    std::vector<Symbol> symbols_;
    std::unordered_map<std::string, std::size_t> index_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<Symbol> symbols);

// b1..bB (degree -i), a1..aA (degree -i), v (degree -1, Laurent).
// Carrier for the Lazard lattice and the bundle-class ring.
AlphabetPtr make_master_alphabet(int b_max, int a_max);

// v (degree -1, Laurent) plus x2..x_max (degree -j): target of rewriting
// bundle classes in the stable generators.
AlphabetPtr make_xv_alphabet(int x_max);

// x1..x_max with positive degrees +j: coefficient polynomials of the
// canonical t-expansion.
AlphabetPtr make_x_alphabet(int x_max);

}  // namespace cobinv

#endif
