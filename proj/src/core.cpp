#include "codetuple/alphabet.hpp"
#include "codetuple/bitstring.hpp"
#include "codetuple/code_tuple.hpp"
#include "codetuple/error.hpp"
#include "codetuple/rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <set>
#include <sstream>

namespace codetuple {

std::string_view to_string(Errc code) noexcept {
    switch (code) {
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::MissingSymbol: return "MissingSymbol";
    case Errc::UnknownSymbol: return "UnknownSymbol";
    case Errc::DuplicateSymbol: return "DuplicateSymbol";
    case Errc::EmptyTuple: return "EmptyTuple";
    case Errc::AlphabetTooSmall: return "AlphabetTooSmall";
    case Errc::AlphabetMismatch: return "AlphabetMismatch";
    case Errc::EmptyString: return "EmptyString";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidDistribution: return "InvalidDistribution";
    case Errc::UndefinedForcedBit: return "UndefinedForcedBit";
    case Errc::NoForkFound: return "NoForkFound";
    case Errc::NotExtendable: return "NotExtendable";
    case Errc::NotKDec: return "NotKDec";
    case Errc::NotRegular: return "NotRegular";
    case Errc::InvalidStream: return "InvalidStream";
    case Errc::NotDecodable: return "NotDecodable";
    case Errc::SpaceTooLarge: return "SpaceTooLarge";
    case Errc::LimitExceeded: return "LimitExceeded";
    case Errc::InternalInvariantViolation: return "InternalInvariantViolation";
    }
    return "Unknown";
}

// ---------------------------------------------------------------------------
// BitString

BitString BitString::parse(std::string_view text) {
    BitString out;
    out.bits_.reserve(text.size());
    for (char ch : text) {
        if (ch != '0' && ch != '1')
            throw Error(Errc::ParseError, "bit string must match ^[01]*$, got \"" + std::string(text) + "\"");
        out.bits_.push_back(ch);
    }
    return out;
}

BitString BitString::from_uint(std::uint64_t value, std::size_t length) {
    BitString out;
    out.bits_.resize(length);
    for (std::size_t p = 0; p < length; ++p)
        out.bits_[p] = ((value >> (length - 1 - p)) & 1U) ? '1' : '0';
    return out;
}

std::uint64_t BitString::to_uint() const noexcept {
    std::uint64_t v = 0;
    for (char ch : bits_)
        v = (v << 1) | static_cast<std::uint64_t>(ch == '1');
    return v;
}

bool is_prefix(const BitString& a, const BitString& b) noexcept {
    return a.size() <= b.size() && std::equal(a.str().begin(), a.str().end(), b.str().begin());
}

BitString suffix_drop_first(const BitString& a) {
    if (a.empty())
        throw Error(Errc::EmptyString, "suffix of the empty bit string");
    return a.substr(1);
}

BitString lcp(const BitString& a, const BitString& b) {
    auto [ia, ib] = std::mismatch(a.str().begin(), a.str().end(), b.str().begin(), b.str().end());
    return a.substr(0, static_cast<std::size_t>(ia - a.str().begin()));
}

std::string display(const BitString& b) {
    return b.empty() ? std::string("λ") : b.str();
}

std::ostream& operator<<(std::ostream& os, const BitString& b) {
    return os << display(b);
}

// ---------------------------------------------------------------------------
// Rational

namespace {

using BigInt = boost::multiprecision::cpp_int;

BigInt parse_integer(std::string_view text, std::string_view whole) {
    if (text.empty())
        throw Error(Errc::ParseError, "malformed number \"" + std::string(whole) + "\"");
    for (char ch : text)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw Error(Errc::ParseError, "malformed number \"" + std::string(whole) + "\"");
    return BigInt(std::string(text));
}

BigInt pow10(std::size_t e) {
    BigInt r = 1;
    for (std::size_t i = 0; i < e; ++i)
        r *= 10;
    return r;
}

} // namespace

Rational parse_rational(std::string_view text) {
    const std::string_view whole = text;
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);

    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }

    Rational value;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_integer(text.substr(0, slash), whole);
        BigInt den = parse_integer(text.substr(slash + 1), whole);
        if (den == 0)
            throw Error(Errc::ParseError, "zero denominator in \"" + std::string(whole) + "\"");
        value = Rational(num, den);
    } else {
        long long exponent = 0;
        if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
            std::string_view exp_text = text.substr(e + 1);
            bool exp_negative = false;
            if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
                exp_negative = exp_text.front() == '-';
                exp_text.remove_prefix(1);
            }
            BigInt magnitude = parse_integer(exp_text, whole);
            if (magnitude > 4096)
                throw Error(Errc::ParseError, "exponent out of range in \"" + std::string(whole) + "\"");
            exponent = magnitude.convert_to<long long>();
            if (exp_negative)
                exponent = -exponent;
            text = text.substr(0, e);
        }
        std::string digits;
        std::size_t frac_digits = 0;
        if (auto dot = text.find('.'); dot != std::string_view::npos) {
            std::string_view int_part = text.substr(0, dot);
            std::string_view frac_part = text.substr(dot + 1);
            if (int_part.empty() && frac_part.empty())
                throw Error(Errc::ParseError, "malformed number \"" + std::string(whole) + "\"");
            digits = std::string(int_part) + std::string(frac_part);
            frac_digits = frac_part.size();
        } else {
            digits = std::string(text);
        }
        BigInt num = parse_integer(digits, whole);
        long long scale = static_cast<long long>(frac_digits) - exponent;
        if (scale >= 0)
            value = Rational(num, pow10(static_cast<std::size_t>(scale)));
        else
            value = Rational(num * pow10(static_cast<std::size_t>(-scale)));
    }
    return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) {
    const BigInt num = boost::multiprecision::numerator(value);
    const BigInt den = boost::multiprecision::denominator(value);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

double to_double(const Rational& value) {
    return value.convert_to<double>();
}

// ---------------------------------------------------------------------------
// Alphabet / Distribution

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.size() < 2)
        throw Error(Errc::AlphabetTooSmall, "alphabet needs at least 2 symbols, got " + std::to_string(symbols_.size()));
    std::set<std::string_view> seen;
    for (const auto& s : symbols_) {
        if (s.empty())
            throw Error(Errc::ParseError, "empty symbol name");
        if (!seen.insert(s).second)
            throw Error(Errc::DuplicateSymbol, "symbol \"" + s + "\" declared twice");
    }
}

Alphabet Alphabet::letters(std::size_t sigma) {
    std::vector<std::string> names;
    names.reserve(sigma);
    for (std::size_t s = 0; s < sigma; ++s)
        names.push_back(s < 26 ? std::string(1, static_cast<char>('a' + s)) : "s" + std::to_string(s));
    return Alphabet(std::move(names));
}

SymbolIndex Alphabet::index_of(std::string_view name) const {
    auto it = std::find(symbols_.begin(), symbols_.end(), name);
    if (it == symbols_.end())
        throw Error(Errc::UnknownSymbol, "symbol \"" + std::string(name) + "\" is not in the alphabet");
    return static_cast<SymbolIndex>(it - symbols_.begin());
}

bool Alphabet::contains(std::string_view name) const noexcept {
    return std::find(symbols_.begin(), symbols_.end(), name) != symbols_.end();
}

SymbolSeq Alphabet::parse_sequence(std::string_view text) const {
    SymbolSeq out;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
        if (contains(token)) {
            out.push_back(index_of(token));
            continue;
        }
        bool splittable = std::all_of(token.begin(), token.end(),
                                      [&](char ch) { return contains(std::string_view(&ch, 1)); });
        if (!splittable)
            throw Error(Errc::UnknownSymbol, "symbol \"" + token + "\" is not in the alphabet");
        for (char ch : token)
            out.push_back(index_of(std::string_view(&ch, 1)));
    }
    return out;
}

std::string Alphabet::format_sequence(const SymbolSeq& x, std::string_view sep) const {
    std::string out;
    for (std::size_t p = 0; p < x.size(); ++p) {
        if (p)
            out += sep;
        out += name(x[p]);
    }
    return out;
}

Distribution::Distribution(AlphabetPtr alphabet, std::vector<Rational> probs)
    : alphabet_(std::move(alphabet)), probs_(std::move(probs)) {
    if (probs_.size() != alphabet_->size())
        throw Error(Errc::AlphabetMismatch, "distribution has " + std::to_string(probs_.size()) +
                                                " entries for an alphabet of " + std::to_string(alphabet_->size()));
    Rational sum = 0;
    for (std::size_t s = 0; s < probs_.size(); ++s) {
        if (probs_[s] <= 0 || probs_[s] > 1)
            throw Error(Errc::InvalidDistribution, "probability of \"" + alphabet_->name(s) + "\" is " +
                                                       to_string(probs_[s]) + ", must lie in (0, 1]");
        sum += probs_[s];
    }
    if (sum != 1)
        throw Error(Errc::InvalidDistribution, "probabilities sum to " + to_string(sum));
}

Distribution Distribution::uniform(AlphabetPtr alphabet) {
    const auto n = static_cast<long long>(alphabet->size());
    std::vector<Rational> probs(alphabet->size(), Rational(1, n));
    return Distribution(std::move(alphabet), std::move(probs));
}

// ---------------------------------------------------------------------------
// CodeTable / CodeTuple

std::size_t CodeTable::max_length() const noexcept {
    std::size_t len = 0;
    for (const auto& w : codewords)
        len = std::max(len, w.size());
    return len;
}

CodeTuple::CodeTuple(AlphabetPtr alphabet, std::vector<CodeTable> tables,
                     std::vector<std::vector<TableIndex>> transitions)
    : alphabet_(std::move(alphabet)), tables_(std::move(tables)), transitions_(std::move(transitions)) {
    if (!alphabet_)
        throw Error(Errc::AlphabetTooSmall, "code-tuple without an alphabet");
    const std::size_t m = tables_.size();
    if (m == 0)
        throw Error(Errc::EmptyTuple, "a code-tuple needs at least one table");
    if (transitions_.size() != m)
        throw Error(Errc::MissingSymbol, "got " + std::to_string(m) + " tables but " +
                                             std::to_string(transitions_.size()) + " transition maps");
    for (TableIndex i = 0; i < m; ++i) {
        if (tables_[i].size() != sigma())
            throw Error(Errc::MissingSymbol, "table " + std::to_string(i) + " is not total over the alphabet");
        if (transitions_[i].size() != sigma())
            throw Error(Errc::MissingSymbol, "transition map " + std::to_string(i) + " is not total over the alphabet");
        for (TableIndex t : transitions_[i])
            if (t >= m)
                throw Error(Errc::IndexOutOfRange, "transition target " + std::to_string(t) + " in table " +
                                                       std::to_string(i) + " is outside [" + std::to_string(m) + "]");
    }
}

std::size_t CodeTuple::max_codeword_length() const noexcept {
    std::size_t len = 0;
    for (const auto& t : tables_)
        len = std::max(len, t.max_length());
    return len;
}

bool operator==(const CodeTuple& a, const CodeTuple& b) {
    return a.alphabet() == b.alphabet() && a.tables_ == b.tables_ && a.transitions_ == b.transitions_;
}

CodeTuple validate_code_tuple(std::span<const RawTable> raw, AlphabetPtr alphabet) {
    if (alphabet->size() < 2)
        throw Error(Errc::AlphabetTooSmall, "alphabet needs at least 2 symbols");
    if (raw.empty())
        throw Error(Errc::EmptyTuple, "a code-tuple needs at least one table");
    const auto m = static_cast<std::int64_t>(raw.size());

    std::vector<CodeTable> tables;
    std::vector<std::vector<TableIndex>> transitions;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        for (const auto& [name, _] : raw[i].code)
            alphabet->index_of(name);
        for (const auto& [name, _] : raw[i].next)
            alphabet->index_of(name);

        CodeTable table;
        std::vector<TableIndex> next;
        for (const auto& name : alphabet->symbols()) {
            auto cw = raw[i].code.find(name);
            if (cw == raw[i].code.end())
                throw Error(Errc::MissingSymbol, "table " + std::to_string(i) + " has no codeword for \"" + name + "\"");
            auto nx = raw[i].next.find(name);
            if (nx == raw[i].next.end())
                throw Error(Errc::MissingSymbol, "table " + std::to_string(i) + " has no transition for \"" + name + "\"");
            if (nx->second < 0 || nx->second >= m)
                throw Error(Errc::IndexOutOfRange, "transition target " + std::to_string(nx->second) + " for \"" +
                                                       name + "\" in table " + std::to_string(i) +
                                                       " is outside [" + std::to_string(m) + "]");
            table.codewords.push_back(BitString::parse(cw->second));
            next.push_back(static_cast<TableIndex>(nx->second));
        }
        tables.push_back(std::move(table));
        transitions.push_back(std::move(next));
    }
    return CodeTuple(std::move(alphabet), std::move(tables), std::move(transitions));
}

std::vector<RawTable> to_raw(const CodeTuple& tuple) {
    std::vector<RawTable> out(tuple.size());
    for (TableIndex i = 0; i < tuple.size(); ++i) {
        for (SymbolIndex s = 0; s < tuple.sigma(); ++s) {
            const auto& name = tuple.alphabet().name(s);
            out[i].code[name] = tuple.code(i, s).str();
            out[i].next[name] = static_cast<std::int64_t>(tuple.next(i, s));
        }
    }
    return out;
}

CodeTuple single_table_tuple(AlphabetPtr alphabet, CodeTable table) {
    std::vector<TableIndex> next(alphabet->size(), 0);
    return CodeTuple(std::move(alphabet), {std::move(table)}, {std::move(next)});
}

} // namespace codetuple
