#include "powersum/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <thread>

namespace powersum::oracle {

namespace {

using Side = std::vector<long>;
using Key = std::vector<Integer>;

Key side_key(const Side& side, const std::set<unsigned>& degrees) {
    Key key;
    key.reserve(degrees.size());
    for (unsigned k : degrees) {
        Integer acc(0);
        for (long v : side) {
            Integer base(v);
            acc += ipow(base, k);
        }
        key.push_back(acc);
    }
    return key;
}

// nondecreasing multisets of `len` entries drawn from `values` (sorted)
void enumerate_multisets(const std::vector<long>& values, unsigned len,
                         const std::function<void(const Side&)>& emit) {
    Side current(len);
    std::function<void(unsigned, size_t)> rec = [&](unsigned depth, size_t from) {
        if (depth == len) {
            emit(current);
            return;
        }
        for (size_t i = from; i < values.size(); ++i) {
            current[depth] = values[i];
            rec(depth + 1, i);
        }
    };
    rec(0, 0);
}

unsigned resolve_workers(const SearchSpec& spec) {
    if (spec.workers > 0) return spec.workers;
    if (const char* env = std::getenv("POWERSUM_WORKERS")) {
        long n = std::strtol(env, nullptr, 10);
        if (n > 0) return static_cast<unsigned>(n);
    }
    return 1;
}

Integer multiset_count(size_t nvalues, unsigned len) {
    Integer c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(nvalues + len - 1),
                 static_cast<unsigned long>(len));
    return c;
}

PowerSumPair assemble(const Side& lhs, const Side& rhs, const std::set<unsigned>& degrees) {
    PowerSumPair p;
    p.lhs.reserve(lhs.size());
    p.rhs.reserve(rhs.size());
    for (long v : lhs) p.lhs.emplace_back(v);
    for (long v : rhs) p.rhs.emplace_back(v);
    p.degrees = degrees;
    return p;
}

}  // namespace

bool spec_signed(const SearchSpec& spec) {
    if (spec.signed_entries) return *spec.signed_entries;
    return degree_class(spec.degrees) != DegreeClass::all_even;
}

std::vector<PowerSumPair> search(const SearchSpec& spec) {
    if (spec.height < 1 || spec.side_len < 1) throw MathError("search: bounds must be >= 1");
    if (spec.degrees.empty()) throw MathError("search: empty degree set");

    std::vector<long> values;
    if (spec_signed(spec)) {
        for (long v = -static_cast<long>(spec.height); v <= static_cast<long>(spec.height); ++v)
            if (v != 0) values.push_back(v);
    } else {
        for (long v = 1; v <= static_cast<long>(spec.height); ++v) values.push_back(v);
    }

    const Integer ceiling(static_cast<unsigned long>(spec.work_ceiling));
    unsigned h1 = spec.side_len / 2;
    unsigned h2 = spec.side_len - h1;
    if (multiset_count(values.size(), h1) + multiset_count(values.size(), h2) > ceiling)
        throw MathError("search: work ceiling exceeded enumerating half subsets; "
                        "use smaller bounds");
    if (multiset_count(values.size(), spec.side_len) > ceiling)
        throw MathError("search: work ceiling exceeded assembling sides; use smaller bounds");

    // target key, when in membership mode
    std::optional<Key> target_key;
    PowerSumPair target_canon;
    if (spec.target) {
        target_canon = canonicalize(*spec.target);
        VerifyReport rep = verify_pair(*spec.target);
        if (!rep.pass) return {};
        Key k;
        for (unsigned d : spec.degrees) {
            Rational acc(0);
            for (const auto& v : spec.target->lhs) acc += v.pow(static_cast<long>(d));
            if (!acc.is_integer()) return {};
            k.push_back(acc.num());
        }
        target_key = std::move(k);
    }

    // meet in the middle: enumerate half multisets once, then join
    // (A, B) with max(A) <= min(B); every nondecreasing side splits
    // uniquely that way
    struct Half {
        Side entries;
        Key key;
    };
    std::vector<Half> first_halves, second_halves;
    enumerate_multisets(values, h1, [&](const Side& s) {
        first_halves.push_back({s, side_key(s, spec.degrees)});
    });
    if (h2 == h1) {
        second_halves = first_halves;
    } else {
        enumerate_multisets(values, h2, [&](const Side& s) {
            second_halves.push_back({s, side_key(s, spec.degrees)});
        });
    }
    // group second halves by minimum entry for the ordered join
    std::map<long, std::vector<const Half*>> by_min;
    for (const auto& h : second_halves) by_min[h.entries.front()].push_back(&h);

    std::map<Key, std::vector<Side>> buckets;
    std::uint64_t side_count = 0;
    for (const auto& a : first_halves) {
        long amax = a.entries.back();
        for (auto it = by_min.lower_bound(amax); it != by_min.end(); ++it) {
            for (const Half* b : it->second) {
                Key key = a.key;
                for (size_t i = 0; i < key.size(); ++i) key[i] += b->key[i];
                if (target_key && key != *target_key) continue;
                Side side = a.entries;
                side.insert(side.end(), b->entries.begin(), b->entries.end());
                buckets[key].push_back(std::move(side));
                ++side_count;
            }
        }
    }
    (void)side_count;

    // join-output estimate against the ceiling (full mode)
    if (!target_key) {
        Integer est(0);
        for (const auto& [key, sides] : buckets) {
            Integer n(static_cast<unsigned long>(sides.size()));
            est += n * (n - 1) / 2;
        }
        if (est > ceiling)
            throw MathError("search: work ceiling exceeded joining " + est.get_str() +
                            " candidate pairs; use smaller bounds");
    }

    if (target_key) {
        // membership: both target sides must be assembled in the bucket
        auto it = buckets.find(*target_key);
        if (it == buckets.end()) return {};
        auto side_of = [](const std::vector<Rational>& vs) {
            Side s;
            for (const auto& v : vs) s.push_back(static_cast<long>(v.num().get_si()));
            std::sort(s.begin(), s.end());
            return s;
        };
        Side lt = side_of(spec.target->lhs), rt = side_of(spec.target->rhs);
        bool found_l = false, found_r = false;
        for (const auto& s : it->second) {
            if (s == lt) found_l = true;
            if (s == rt) found_r = true;
        }
        if (found_l && found_r && lt != rt) return {target_canon};
        return {};
    }

    // full mode: all distinct unordered pairs within each bucket,
    // canonicalized and deduplicated; fan buckets across workers
    std::vector<const std::pair<const Key, std::vector<Side>>*> bucket_list;
    bucket_list.reserve(buckets.size());
    for (const auto& b : buckets) bucket_list.push_back(&b);

    unsigned workers = std::max(1u, resolve_workers(spec));
    workers = std::min<unsigned>(workers, std::max<size_t>(1, bucket_list.size()));
    std::vector<std::vector<PowerSumPair>> partial(workers);

    auto run = [&](unsigned wid) {
        for (size_t bi = wid; bi < bucket_list.size(); bi += workers) {
            const auto& sides = bucket_list[bi]->second;
            for (size_t i = 0; i < sides.size(); ++i) {
                for (size_t j = i + 1; j < sides.size(); ++j) {
                    if (sides[i] == sides[j]) continue;  // trivial
                    PowerSumPair p = canonicalize(assemble(sides[i], sides[j], spec.degrees));
                    // signed inputs can cancel to identical multisets
                    std::vector<Rational> l = p.lhs, r = p.rhs;
                    std::sort(l.begin(), l.end());
                    std::sort(r.begin(), r.end());
                    if (l == r) continue;
                    partial[wid].push_back(std::move(p));
                }
            }
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& th : pool) th.join();
    }

    std::vector<PowerSumPair> out;
    for (auto& part : partial)
        for (auto& p : part) out.push_back(std::move(p));
    std::sort(out.begin(), out.end(), pair_less);
    out.erase(std::unique(out.begin(), out.end(),
                          [](const PowerSumPair& a, const PowerSumPair& b) {
                              return !pair_less(a, b) && !pair_less(b, a);
                          }),
              out.end());
    return out;
}

bool oracle_verify(const PowerSumPair& pair) {
    // common denominator, then pure integer power sums
    Integer den(1);
    for (const auto& v : pair.lhs) den = lcm(den, v.den());
    for (const auto& v : pair.rhs) den = lcm(den, v.den());
    std::vector<Integer> lhs, rhs;
    for (const auto& v : pair.lhs) lhs.push_back(v.num() * (den / v.den()));
    for (const auto& v : pair.rhs) rhs.push_back(v.num() * (den / v.den()));
    for (unsigned k : pair.degrees) {
        Integer sl(0), sr(0);
        for (const auto& e : lhs) sl += ipow(e, k);
        for (const auto& e : rhs) sr += ipow(e, k);
        if (sl != sr) return false;
    }
    return true;
}

}  // namespace powersum::oracle
