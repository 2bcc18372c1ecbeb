#include "codetuple/explore.hpp"
#include "codetuple/delay.hpp"
#include "codetuple/error.hpp"
#include "codetuple/huffman.hpp"
#include "codetuple/markov.hpp"
#include "codetuple/structure.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <random>
#include <string>
#include <thread>

namespace codetuple {

namespace {

constexpr std::uint64_t saturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > saturated / a)
        return saturated;
    return a * b;
}

std::uint64_t pow_sat(std::uint64_t base, std::size_t exp) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < exp; ++i)
        r = mul_sat(r, base);
    return r;
}

std::uint64_t block_size(std::size_t sigma, std::size_t m, std::size_t len_max) {
    const std::uint64_t w = (std::uint64_t{1} << (len_max + 1)) - 1;
    return mul_sat(pow_sat(w, sigma * m), pow_sat(m, sigma * m));
}

void record(TheoremReport& report, const TupleRow& row, const CodeTuple& tuple) {
    ++report.candidates_examined;
    if (!row.in_ext)
        return;
    ++report.in_ext;
    if (!row.in_reg.value_or(false))
        return;
    ++report.in_ext_reg;
    if (!row.in_kdec.value_or(false))
        return;
    ++report.in_class;
    const Rational& length = *row.length;
    if (!report.min_class_length || length < *report.min_class_length) {
        report.min_class_length = length;
        report.best_id = row.id;
        report.best_tuple = tuple;
    }
    if (length < report.huffman_length)
        report.violations.push_back(Violation{row.id, tuple, length});
}

TheoremReport empty_report(const Rational& huffman, std::size_t sigma, std::size_t m_max, std::size_t len_max,
                           std::size_t k) {
    TheoremReport r;
    r.sigma = sigma;
    r.m_max = m_max;
    r.len_max = len_max;
    r.k = k;
    r.huffman_length = huffman;
    return r;
}

} // namespace

SearchSpace::SearchSpace(Distribution mu_, std::size_t m_max_, std::size_t len_max_)
    : mu(std::move(mu_)), m_max(m_max_), len_max(len_max_) {
    if (m_max == 0)
        throw Error(Errc::IndexOutOfRange, "m_max must be at least 1");
    if (len_max == 0 || len_max > 16)
        throw Error(Errc::IndexOutOfRange, "len_max must be in 1..16");
}

std::uint64_t count_code_tuples(const SearchSpace& space) {
    std::uint64_t total = 0;
    for (std::size_t m = 1; m <= space.m_max; ++m) {
        const std::uint64_t b = block_size(space.sigma(), m, space.len_max);
        total = total > saturated - b ? saturated : total + b;
    }
    return total;
}

TupleEnumerator::TupleEnumerator(const SearchSpace& space, std::uint64_t cap)
    : alphabet_(space.mu.alphabet_ptr()), m_max_(space.m_max) {
    total_ = count_code_tuples(space);
    if (total_ > cap || total_ == saturated)
        throw Error(Errc::SpaceTooLarge, "the space holds " +
                                             (total_ == saturated ? std::string("more than 2^64")
                                                                  : std::to_string(total_)) +
                                             " tuples, above the cap of " + std::to_string(cap));
    for (std::size_t len = 0; len <= space.len_max; ++len)
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v)
            codeword_choices_.push_back(BitString::from_uint(v, len));
    std::uint64_t start = 0;
    for (std::size_t m = 1; m <= m_max_; ++m) {
        block_start_.push_back(start);
        start += block_size(space.sigma(), m, space.len_max);
    }
}

CodeTuple TupleEnumerator::at(std::uint64_t index) const {
    if (index >= total_)
        throw Error(Errc::IndexOutOfRange, "tuple id " + std::to_string(index) + " is outside the space");
    std::size_t m = m_max_;
    while (block_start_[m - 1] > index)
        --m;
    std::uint64_t local = index - block_start_[m - 1];
    const std::size_t sigma = alphabet_->size();
    const std::uint64_t w = codeword_choices_.size();

    std::vector<std::vector<TableIndex>> transitions(m, std::vector<TableIndex>(sigma));
    for (std::size_t i = m; i-- > 0;) {
        for (std::size_t s = sigma; s-- > 0;) {
            transitions[i][s] = static_cast<TableIndex>(local % m);
            local /= m;
        }
    }
    std::vector<CodeTable> tables(m);
    for (std::size_t i = m; i-- > 0;) {
        tables[i].codewords.resize(sigma);
        for (std::size_t s = sigma; s-- > 0;) {
            tables[i].codewords[s] = codeword_choices_[local % w];
            local /= w;
        }
    }
    return CodeTuple(alphabet_, std::move(tables), std::move(transitions));
}

std::optional<CodeTuple> TupleEnumerator::next() {
    if (cursor_ >= total_)
        return std::nullopt;
    return at(cursor_++);
}

void TheoremReport::merge(TheoremReport&& other) {
    candidates_examined += other.candidates_examined;
    in_ext += other.in_ext;
    in_ext_reg += other.in_ext_reg;
    in_class += other.in_class;
    if (other.min_class_length) {
        const bool take = !min_class_length || *other.min_class_length < *min_class_length ||
                          (*other.min_class_length == *min_class_length && *other.best_id < *best_id);
        if (take) {
            min_class_length = std::move(other.min_class_length);
            best_id = other.best_id;
            best_tuple = std::move(other.best_tuple);
        }
    }
    for (auto& v : other.violations)
        violations.push_back(std::move(v));
    std::sort(violations.begin(), violations.end(),
              [](const Violation& a, const Violation& b) { return a.id < b.id; });
}

TupleRow classify_tuple(const CodeTuple& tuple, const Distribution& mu, std::size_t k) {
    TupleRow row;
    row.m = tuple.size();
    row.in_ext = is_extendable(tuple);
    if (!row.in_ext)
        return row;
    row.in_reg = is_regular(tuple, mu);
    if (!*row.in_reg)
        return row;
    row.in_kdec = is_k_bit_delay_decodable(tuple, k);
    if (*row.in_kdec)
        row.length = average_length(tuple, mu);
    return row;
}

TheoremReport verify_theorem1(const SearchSpace& space, std::size_t k, const SweepOptions& options) {
    const TupleEnumerator enumerator(space, options.cap);
    const std::uint64_t total = enumerator.count();
    const std::uint64_t chunk = std::max<std::uint64_t>(options.chunk_size, 1);
    const std::uint64_t chunks = (total + chunk - 1) / chunk;
    const unsigned jobs = std::max(1U, options.jobs);
    const Rational huffman = huffman_length(space.mu);

    TheoremReport report = empty_report(huffman, space.sigma(), space.m_max, space.len_max, k);

    struct Partial {
        TheoremReport report;
        std::vector<TupleRow> rows;
        std::exception_ptr error;
    };
    auto work = [&](std::uint64_t c, Partial& out) {
        try {
            out.report = empty_report(huffman, space.sigma(), space.m_max, space.len_max, k);
            const std::uint64_t end = std::min(total, (c + 1) * chunk);
            for (std::uint64_t id = c * chunk; id < end; ++id) {
                const CodeTuple tuple = enumerator.at(id);
                TupleRow row = classify_tuple(tuple, space.mu, k);
                row.id = id;
                record(out.report, row, tuple);
                if (options.row_sink)
                    out.rows.push_back(std::move(row));
            }
        } catch (...) {
            out.error = std::current_exception();
        }
    };

    for (std::uint64_t wave = 0; wave < chunks; wave += jobs) {
        const std::uint64_t n = std::min<std::uint64_t>(jobs, chunks - wave);
        std::vector<Partial> partials(n);
        if (n == 1) {
            work(wave, partials[0]);
        } else {
            std::vector<std::thread> threads;
            for (std::uint64_t t = 0; t < n; ++t)
                threads.emplace_back(work, wave + t, std::ref(partials[t]));
            for (auto& th : threads)
                th.join();
        }
        for (auto& p : partials) {
            if (p.error)
                std::rethrow_exception(p.error);
            if (options.row_sink)
                for (const auto& row : p.rows)
                    options.row_sink(row);
            report.merge(std::move(p.report));
        }
    }
    return report;
}

TheoremReport verify_theorem1(std::span<const CodeTuple> candidates, const Distribution& mu, std::size_t k) {
    std::size_t m_max = 0;
    std::size_t len_max = 0;
    for (const auto& t : candidates) {
        m_max = std::max(m_max, t.size());
        len_max = std::max(len_max, t.max_codeword_length());
    }
    TheoremReport report = empty_report(huffman_length(mu), mu.size(), m_max, len_max, k);
    for (std::size_t id = 0; id < candidates.size(); ++id) {
        TupleRow row = classify_tuple(candidates[id], mu, k);
        row.id = id;
        record(report, row, candidates[id]);
    }
    return report;
}

std::vector<CodeTuple> sample_random_tuples(const SearchSpace& space, std::size_t n, std::uint64_t seed) {
    std::vector<CodeTuple> out;
    if (n == 0)
        return out;
    const TupleEnumerator enumerator(space, saturated - 1);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, enumerator.count() - 1);
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(enumerator.at(pick(rng)));
    return out;
}

} // namespace codetuple
