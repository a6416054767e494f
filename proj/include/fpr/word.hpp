#pragma once

#include <cstdint>
#include <vector>

namespace fpr {

struct Letter {
    int gen;   // generator index
    int sign;  // +1 or -1
    friend bool operator==(const Letter& a, const Letter& b) {
        return a.gen == b.gen && a.sign == b.sign;
    }
};

// A freely reduced word in the generators of some presentation.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters);

    static Word generator(int g) { return Word({Letter{g, 1}}); }

    bool empty() const { return letters_.empty(); }
    std::size_t size() const { return letters_.size(); }
    const std::vector<Letter>& letters() const { return letters_; }

    Word inverse() const;
    Word operator*(const Word& rhs) const;
    Word pow(long k) const;

    long exponent_sum(int gen) const;
    int max_generator() const;  // -1 for the empty word
    long occurrences(int gen) const;

    friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
    friend bool operator<(const Word& a, const Word& b);

private:
    std::vector<Letter> letters_;
};

std::vector<Letter> freely_reduce(std::vector<Letter> letters);

}  // namespace fpr
