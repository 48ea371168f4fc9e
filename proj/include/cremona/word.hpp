#ifndef CREMONA_WORD_HPP
#define CREMONA_WORD_HPP

#include <utility>
#include <vector>

#include "rational_map.hpp"

namespace cremona {

/// One letter of a word: an invertible linear map or the involution sigma.
class Letter {
   public:
    static Letter sigma() { return Letter(); }
    static Letter linear(const Mat3& m) {
        if (m.det() == 0) throw Error(ErrorCode::SingularMatrix, "linear letter must be invertible");
        return Letter(m);
    }

    bool is_sigma() const noexcept { return sigma_; }
    const Mat3& matrix() const { return m_; }

    RationalMap to_map() const { return sigma_ ? cremona::sigma() : linear_map(m_); }

    friend bool operator==(const Letter& a, const Letter& b) {
        return a.sigma_ == b.sigma_ && (a.sigma_ || a.m_ == b.m_);
    }

   private:
    Letter() : sigma_(true) {}
    explicit Letter(const Mat3& m) : m_(m), sigma_(false) {}

    Mat3 m_;
    bool sigma_;
};

/// Word A1 s A2 s ... in linear letters and sigma, written the way it is
/// composed: the leftmost letter is applied last.
class Word {
   public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    const std::vector<Letter>& letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    int sigma_count() const noexcept {
        int n = 0;
        for (const auto& l : letters_) n += l.is_sigma() ? 1 : 0;
        return n;
    }

    Word& push_sigma() {
        letters_.push_back(Letter::sigma());
        return *this;
    }
    Word& push_linear(const Mat3& m) {
        letters_.push_back(Letter::linear(m));
        return *this;
    }
    Word& append(const Word& w) {
        letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end());
        return *this;
    }

    friend Word operator+(Word a, const Word& b) { return a.append(b); }
    friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }

   private:
    std::vector<Letter> letters_;
};

inline RationalMap word_eval(const Word& w) {
    RationalMap acc = identity_map();
    for (const auto& l : w.letters()) acc = compose(acc, l.to_map());
    return acc;
}

/// Word for the inverse map: letters reversed, linear letters inverted.
inline Word inverse(const Word& w) {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
        out.push_back(it->is_sigma() ? Letter::sigma() : Letter::linear(it->matrix().inverse()));
    return Word(std::move(out));
}

/// Merges adjacent linear letters and drops identity letters. Evaluation is
/// unchanged; adjacent sigmas are kept (they are not cancelled).
inline Word simplify(const Word& w) {
    std::vector<Letter> out;
    for (const auto& l : w.letters()) {
        if (!l.is_sigma() && !out.empty() && !out.back().is_sigma()) {
            out.back() = Letter::linear(out.back().matrix() * l.matrix());
        } else {
            out.push_back(l);
        }
        if (!out.back().is_sigma() && out.back().matrix().is_identity()) out.pop_back();
    }
    return Word(std::move(out));
}

inline Word repeat(const Word& w, int times) {
    Word out;
    for (int i = 0; i < times; ++i) out.append(w);
    return out;
}

}  // namespace cremona

#endif  // CREMONA_WORD_HPP
