#include "adjoint/text.hpp"

#include <cctype>
#include <limits>

#include "adjoint/errors.hpp"

namespace adjoint {

namespace {

class Parser {
public:
    Parser(std::string_view text, PrimeField field, int cap)
        : text_(text), field_(field), cap_(cap) {}

    TruncatedPoly parse()
    {
        std::vector<Term> terms;
        skip_space();
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
        }
        for (;;) {
            Term t = term();
            if (negative)
                t.coeff = field_.neg(t.coeff);
            terms.push_back(t);
            skip_space();
            if (at_end())
                break;
            if (peek() == '+')
                negative = false;
            else if (peek() == '-')
                negative = true;
            else
                fail("expected '+' or '-'");
            ++pos_;
        }
        return TruncatedPoly::from_terms(field_, cap_, std::move(terms));
    }

private:
    Term term()
    {
        skip_space();
        const std::size_t start = pos_;
        Coeff coeff = 1;
        bool have_coeff = false;
        if (is_digit()) {
            coeff = field_.reduce(uint_mod_p());
            have_coeff = true;
            skip_star();
        }
        std::string letters;
        std::uint64_t degree = 0;
        while (true) {
            skip_space();
            const char c = peek();
            if (c != 'x' && c != 'y')
                break;
            ++pos_;
            std::uint64_t exponent = 1;
            skip_space();
            if (peek() == '^') {
                ++pos_;
                skip_space();
                if (!is_digit())
                    fail("expected exponent after '^'");
                exponent = uint_saturating();
            }
            degree = std::min<std::uint64_t>(degree + exponent, std::uint64_t{1} << 40);
            if (degree > static_cast<std::uint64_t>(cap_))
                over_cap(start, degree);
            letters.append(static_cast<std::size_t>(exponent), c);
            skip_star();
        }
        if (!have_coeff && letters.empty())
            fail("expected a coefficient or a factor x|y");
        return {Word::from_letters(letters), coeff};
    }

    [[noreturn]] void over_cap(std::size_t start, std::uint64_t degree)
    {
        // Report the whole offending term.
        std::size_t end = pos_;
        while (end < text_.size() && text_[end] != '+' && text_[end] != '-')
            ++end;
        std::string term(text_.substr(start, end - start));
        while (!term.empty() && std::isspace(static_cast<unsigned char>(term.back())))
            term.pop_back();
        throw ParseError("term '" + term + "' has degree " + std::to_string(degree) +
                             " above cap " + std::to_string(cap_),
                         start);
    }

    std::uint64_t uint_mod_p()
    {
        std::uint64_t v = 0;
        while (is_digit())
            v = (v * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0')) % field_.p();
        return v;
    }

    std::uint64_t uint_saturating()
    {
        constexpr std::uint64_t limit = std::numeric_limits<std::uint32_t>::max();
        std::uint64_t v = 0;
        while (is_digit())
            v = std::min(limit, v * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0'));
        return v;
    }

    void skip_star()
    {
        skip_space();
        if (peek() == '*') {
            ++pos_;
            skip_space();
            if (peek() != 'x' && peek() != 'y')
                fail("expected a factor after '*'");
        }
    }

    void skip_space()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    bool is_digit() const { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

    [[noreturn]] void fail(const std::string& what)
    {
        if (at_end())
            throw ParseError(what + ", found end of input", pos_);
        throw ParseError(what + ", found '" + std::string(1, text_[pos_]) + "'", pos_);
    }

    std::string_view text_;
    PrimeField field_;
    int cap_;
    std::size_t pos_ = 0;
};

} // namespace

TruncatedPoly parse_poly(std::string_view text, PrimeField field, int cap)
{
    return Parser(text, field, cap).parse();
}

std::string format_word(Word w)
{
    std::string out;
    const int n = w.degree();
    for (int i = 0; i < n;) {
        const char c = w.letter(i);
        int run = 1;
        while (i + run < n && w.letter(i + run) == c)
            ++run;
        if (!out.empty())
            out += '*';
        out += c;
        if (run > 1)
            out += '^' + std::to_string(run);
        i += run;
    }
    return out;
}

std::string format_poly(const TruncatedPoly& a)
{
    if (a.is_zero())
        return "0";
    std::string out;
    for (const Term& t : a.terms()) {
        if (!out.empty())
            out += " + ";
        if (t.word.empty()) {
            out += std::to_string(t.coeff);
            continue;
        }
        if (t.coeff != 1)
            out += std::to_string(t.coeff) + '*';
        out += format_word(t.word);
    }
    return out;
}

} // namespace adjoint
