#include "limitada/analysis.hpp"

#include "limitada/errors.hpp"

namespace limitada {

std::vector<long long> primes_upto(long long k) {
    std::vector<long long> out;
    if (k < 2) return out;
    std::vector<bool> composite(static_cast<std::size_t>(k + 1), false);
    for (long long p = 2; p <= k; ++p) {
        if (composite[static_cast<std::size_t>(p)]) continue;
        out.push_back(p);
        for (long long q = p * p; q <= k; q += p) composite[static_cast<std::size_t>(q)] = true;
    }
    return out;
}

BigInt primorial(long long k) {
    BigInt r = 1;
    for (long long p : primes_upto(k)) r *= p;
    return r;
}

BigInt sum_primes(long long k) {
    BigInt r = 0;
    for (long long p : primes_upto(k)) r += p;
    return r;
}

long long k_of(int n) {
    if (n < 0 || n > 40) throw InputError("n out of range");
    return (1LL << n) * (n + 1) + 1;
}

bool m_n_member(int n, long long m) {
    if (m == 0) return true;
    long long k = k_of(n);
    for (long long d = 2; d <= k && d <= m; ++d)
        if (m % d == 0) return true;
    return false;
}

UnaryPredicate m_n_lengths(int n) {
    auto primes = primes_upto(k_of(n));
    return [primes](long long m) {
        if (m == 0) return true;
        for (long long p : primes)
            if (m % p == 0) return true;
        return false;
    };
}

LanguageOracle m_n_oracle(int n) {
    UnaryPredicate f = m_n_lengths(n);
    return {Alphabet({"a"}), [f](const Word& w) { return f(static_cast<long long>(w.size())); }};
}

LanguageOracle complement(const LanguageOracle& o) {
    auto f = o.member;
    return {o.alphabet, [f](const Word& w) { return !f(w); }};
}

UnaryPredicate lengths_of(const LanguageOracle& unary) {
    if (unary.alphabet.size() != 1) throw InputError("oracle is not unary");
    auto f = unary.member;
    return [f](long long m) { return f(Word(static_cast<std::size_t>(m), 0)); };
}

UnaryProfile cyclic_profile(const UnaryPredicate& member, long long N) {
    if (N < 0) throw InputError("window must be non-negative");
    UnaryProfile prof;
    prof.bits.resize(static_cast<std::size_t>(N + 1));
    for (long long i = 0; i <= N; ++i) prof.bits[static_cast<std::size_t>(i)] = member(i);
    auto bit = [&](long long i) { return prof.bits[static_cast<std::size_t>(i)]; };
    for (long long c = 1; 2 * c <= N + 1; ++c) {
        long long t = 0;
        for (long long i = N - c; i >= 0; --i)
            if (bit(i) != bit(i + c)) {
                t = i + 1;
                break;
            }
        if (N + 1 - t >= 2 * c) {
            prof.period = c;
            prof.preperiod = t;
            prof.window_consistent = true;
            return prof;
        }
    }
    return prof;
}

OneWayMachine cyclic_dfa_from_oracle(const UnaryPredicate& member, long long C) {
    if (C < 1 || C > 100'000'000) throw InputError("period out of range");
    std::vector<bool> acc(static_cast<std::size_t>(C));
    for (long long i = 0; i < C; ++i) acc[static_cast<std::size_t>(i)] = member(i);
    for (long long i = 0; i <= C; ++i)
        if (member(i + C) != acc[static_cast<std::size_t>(i % C)])
            throw InputError("language is not " + std::to_string(C) + "-periodic at length " + std::to_string(i));
    const int c = static_cast<int>(C);
    OneWayMachine m(Alphabet({"a"}), c);
    for (int i = 0; i < c; ++i) {
        m.add(i, 0, (i + 1) % c);
        if (acc[static_cast<std::size_t>(i)]) m.set_final(i);
    }
    m.note = std::to_string(C) + "-cycle of residues";
    return m;
}

FoolingCheck check_extended_fooling_set(const std::vector<FoolingPair>& pairs, const LanguageOracle& o) {
    FoolingCheck res;
    auto cat = [](const Word& a, const Word& b) {
        Word w = a;
        w.insert(w.end(), b.begin(), b.end());
        return w;
    };
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (!o.member(cat(pairs[i].x, pairs[i].y))) res.not_in_language.push_back(i);
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = i + 1; j < pairs.size(); ++j)
            if (o.member(cat(pairs[i].x, pairs[j].y)) && o.member(cat(pairs[j].x, pairs[i].y)))
                res.cross_failures.emplace_back(i, j);
    res.ok = res.not_in_language.empty() && res.cross_failures.empty();
    return res;
}

std::vector<FoolingPair> fooling_pairs_for_complement(int n, long long max_word_length) {
    auto primes = primes_upto(k_of(n));
    if (primes.size() > 24) throw ResourceError("too many prime subsets", std::size_t{1} << 24);
    if (primorial(k_of(n)) > max_word_length)
        throw ResourceError("prime products exceed the word-length budget", static_cast<std::size_t>(max_word_length));
    std::vector<FoolingPair> out;
    const std::size_t subsets = std::size_t{1} << primes.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        long long in = 1, rest = 1;
        for (std::size_t b = 0; b < primes.size(); ++b) ((mask >> b) & 1 ? in : rest) *= primes[b];
        out.push_back({Word(static_cast<std::size_t>(in), 0), Word(static_cast<std::size_t>(rest), 0)});
    }
    return out;
}

bool BoundReport::required_hold() const {
    for (const auto& c : checks)
        if (c.required && !c.holds) return false;
    return true;
}

namespace {

BigInt pow2(long long e) {
    BigInt r = 1;
    r <<= static_cast<unsigned>(e);
    return r;
}

std::string str(const BigInt& v) { return v.str(); }

}  // namespace

BoundReport bound_report(int n) {
    if (n < 0 || n > 12) throw InputError("bound_report supports 0 <= n <= 12");
    BoundReport r;
    r.n = n;
    r.k = k_of(n);
    r.prime_count = primes_upto(r.k).size();
    const long long two_n = 1LL << n;
    const BigInt prim = primorial(r.k);
    const BigInt big = pow2(two_n * n);
    const BigInt dbl = pow2(two_n);

    r.checks.push_back({"primorial_exceeds", "primorial(" + std::to_string(r.k) + ")=" + str(prim), ">",
                        "2^" + std::to_string(two_n * n) + "=" + str(big), prim > big, true,
                        n < 4 ? "small n, checked by direct calculation" : "checked by exact integer comparison"});

    bool count_ok = n == 0 ? true : BigInt(r.prime_count) > pow2(n - 1);
    r.checks.push_back({"prime_count", "|P|=" + std::to_string(r.prime_count), ">",
                        n == 0 ? std::string("1/2") : "2^" + std::to_string(n - 1) + "=" + str(pow2(n - 1)), count_ok,
                        true, "lower bound on the fooling set exponent"});

    r.checks.push_back({"period_below_primorial", "2^(2^" + std::to_string(n) + ")=" + str(dbl), "<", str(prim),
                        dbl < prim, n >= 1, "period of a small two-way machine against the minimal period"});
    r.checks.push_back({"period_chain", str(dbl), "<", str(big), dbl < big, false,
                        "literal intermediate step; not strict for n <= 1"});

    {
        BigInt m = two_n - 1;
        BigInt lhs = m * boost::multiprecision::pow(m + 1, static_cast<unsigned>(two_n - 1));
        r.checks.push_back({"d1la_conversion", "m(m+1)^m with m=" + str(m) + ": " + str(lhs), "<", str(big), lhs < big,
                            true, "deterministic 1-LA with fewer than 2^n states"});
    }
    {
        long long m = 1;
        while ((m + 1) * (m + 1) <= two_n) ++m;
        BigInt lhs = BigInt(m) * pow2(m * m);
        r.checks.push_back({"one_la_complement_literal", "m*2^(m^2) with m=" + std::to_string(m) + ": " + str(lhs), "<",
                            str(dbl), lhs < dbl, false, "literal inequality; fails whenever m^2 = 2^n"});
        r.checks.push_back({"one_la_complement", "m*2^(m^2) with m=" + std::to_string(m) + ": " + str(lhs), "<", str(big),
                            lhs < big, n >= 1, "contradiction with the fooling set bound 2^(n 2^n)"});
    }
    return r;
}

}  // namespace limitada
