#include "cobinv/alphabet.hpp"

#include "cobinv/errors.hpp"

namespace cobinv {

Alphabet::Alphabet(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        auto [it, fresh] = index_.emplace(symbols_[i].name, i);
        if (!fresh) throw Error("duplicate symbol name: " + symbols_[i].name);
    }
}

std::optional<std::size_t> Alphabet::find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t Alphabet::require(const std::string& name) const {
    auto i = find(name);
    if (!i) throw Error("unknown symbol: " + name);
    return *i;
}

AlphabetPtr make_alphabet(std::vector<Symbol> symbols) {
    return std::make_shared<const Alphabet>(std::move(symbols));
}

AlphabetPtr make_master_alphabet(int b_max, int a_max) {
    std::vector<Symbol> syms;
    for (int i = 1; i <= b_max; ++i)
        syms.push_back({"b" + std::to_string(i), -i, false});
    for (int i = 1; i <= a_max; ++i)
        syms.push_back({"a" + std::to_string(i), -i, false});
    syms.push_back({"v", -1, true});
    return make_alphabet(std::move(syms));
}

AlphabetPtr make_xv_alphabet(int x_max) {
    std::vector<Symbol> syms;
    syms.push_back({"v", -1, true});
    for (int j = 2; j <= x_max; ++j)
        syms.push_back({"x" + std::to_string(j), -j, false});
    return make_alphabet(std::move(syms));
}

AlphabetPtr make_x_alphabet(int x_max) {
    std::vector<Symbol> syms;
    for (int j = 1; j <= x_max; ++j)
        syms.push_back({"x" + std::to_string(j), j, false});
    return make_alphabet(std::move(syms));
}

}  // namespace cobinv
