#include "fpr/word.hpp"

#include <algorithm>
#include <cstdlib>

namespace fpr {

std::vector<Letter> freely_reduce(std::vector<Letter> letters) {
    std::vector<Letter> out;
    out.reserve(letters.size());
    for (const Letter& l : letters) {
        if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign) {
            out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    return out;
}

Word::Word(std::vector<Letter> letters) : letters_(freely_reduce(std::move(letters))) {}

Word Word::inverse() const {
    std::vector<Letter> inv;
    inv.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
        inv.push_back(Letter{it->gen, -it->sign});
    }
    return Word(std::move(inv));  // already reduced, constructor is a no-op pass
}

Word Word::operator*(const Word& rhs) const {
    std::vector<Letter> cat = letters_;
    cat.insert(cat.end(), rhs.letters_.begin(), rhs.letters_.end());
    return Word(std::move(cat));
}

Word Word::pow(long k) const {
    Word base = k < 0 ? inverse() : *this;
    long n = std::abs(k);
    Word acc;
    for (long i = 0; i < n; ++i) acc = acc * base;
    return acc;
}

long Word::exponent_sum(int gen) const {
    long s = 0;
    for (const Letter& l : letters_)
        if (l.gen == gen) s += l.sign;
    return s;
}

int Word::max_generator() const {
    int m = -1;
    for (const Letter& l : letters_) m = std::max(m, l.gen);
    return m;
}

long Word::occurrences(int gen) const {
    long c = 0;
    for (const Letter& l : letters_)
        if (l.gen == gen) ++c;
    return c;
}

bool operator<(const Word& a, const Word& b) {
    auto key = [](const Letter& l) { return std::pair<int, int>(l.gen, l.sign); };
    return std::lexicographical_compare(
        a.letters_.begin(), a.letters_.end(), b.letters_.begin(), b.letters_.end(),
        [&](const Letter& x, const Letter& y) { return key(x) < key(y); });
}

}  // namespace fpr
