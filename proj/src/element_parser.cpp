#include "tc/element_parser.hpp"

#include <cctype>
#include <stdexcept>

namespace tc {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    WordSum parse()
    {
        WordSum out;
        skip_space();
        if (at_end())
            fail("empty expression");
        bool negative = false;
        if (peek() == '+' || peek() == '-')
            negative = get() == '-';
        out.push_back(term(negative));
        for (skip_space(); !at_end(); skip_space()) {
            const char op = get();
            if (op != '+' && op != '-')
                fail(std::string("expected '+' or '-', found '") + op + "'");
            out.push_back(term(op == '-'));
        }
        return out;
    }

private:
    std::pair<mpz_class, Word> term(bool negative)
    {
        skip_space();
        mpz_class coeff = 1;
        Word word;
        bool need_factor = true;
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = integer();
            skip_space();
            need_factor = false;
            if (!at_end() && peek() == '*') {
                get();
                need_factor = true;
            } else if (!at_end() && peek() == 'e') {
                need_factor = true;
            }
        }
        if (need_factor) {
            factor(word);
            for (skip_space(); !at_end() && peek() == '*'; skip_space()) {
                get();
                factor(word);
            }
        }
        if (negative)
            coeff = -coeff;
        return {coeff, word};
    }

    void factor(Word& word)
    {
        skip_space();
        if (at_end())
            fail("expected a generator");
        if (peek() == '1') {
            get();
            return;
        }
        if (get() != 'e')
            fail("expected a generator like e12 or e1_12");
        std::string first = digits();
        if (!at_end() && peek() == '_') {
            get();
            std::string second = digits();
            if (first.empty() || second.empty())
                fail("malformed generator");
            word.push_back({std::stoi(first), std::stoi(second)});
            return;
        }
        if (first.size() != 2)
            fail("generator e" + first + " is ambiguous; write e<i>_<j>");
        word.push_back({first[0] - '0', first[1] - '0'});
    }

    mpz_class integer() { return mpz_class(digits()); }

    std::string digits()
    {
        std::string out;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            out += get();
        return out;
    }

    void skip_space()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    char get() { return text_[pos_++]; }

    [[noreturn]] void fail(const std::string& msg) const
    {
        throw std::invalid_argument("parse error at position " + std::to_string(pos_) + ": " + msg);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

WordSum parse_word_sum(std::string_view text)
{
    return Parser(text).parse();
}

} // namespace tc
