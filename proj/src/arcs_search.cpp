#include <algorithm>
#include <optional>

#include "capforge/arcs.hpp"
#include "capforge/bitvec.hpp"

namespace capforge::arcs {

namespace {

/// Precomputed incidence: for every line of the plane (indexed by the rank of
/// its dual coordinates) the ranks of its q+1 points.  Lets coverage updates
/// walk a secant with one cross product and a row of table reads instead of
/// q-1 point normalizations.  Built once per search; skipped for planes where
/// the table would be unreasonably large.
struct line_table {
    const pg::geometry* g;
    unsigned stride;                 // q + 1 entries per line
    std::vector<std::uint32_t> pts;  // row for line d starts at d * stride

    explicit line_table(const pg::geometry& geom) : g(&geom), stride(geom.q() + 1) {
        pts.resize(static_cast<std::size_t>(geom.point_count()) * stride);
        for (std::uint32_t d = 0; d < geom.point_count(); ++d) {
            pg::point l = geom.unrank(d);
            // Two independent solutions of l . x = 0 (characteristic two).
            pg::point b1{}, b2{};
            b1.len = b2.len = 3;
            if (l.c[0] != 0) {
                b1.c = {l.c[1], l.c[0], 0};
                b2.c = {l.c[2], 0, l.c[0]};
            } else if (l.c[1] != 0) {
                b1.c = {1, 0, 0};
                b2.c = {0, l.c[2], l.c[1]};
            } else {
                b1.c = {1, 0, 0};
                b2.c = {0, 1, 0};
            }
            std::uint32_t* row = &pts[static_cast<std::size_t>(d) * stride];
            row[0] = geom.rank(geom.normalize(b1));
            row[1] = geom.rank(geom.normalize(b2));
            for (unsigned lambda = 1; lambda < geom.q(); ++lambda)
                row[1 + lambda] = geom.rank(geom.normalize(
                    pg::geometry::add(b2, geom.scalar_mul(static_cast<gf::elem>(lambda), b1))));
        }
    }

    static bool fits(const pg::geometry& geom) {
        return static_cast<std::size_t>(geom.point_count()) * (geom.q() + 1) * 4 <= (80u << 20);
    }

    std::uint32_t line_rank(const pg::point& a, const pg::point& b) const {
        const auto& f = g->field();
        pg::point l{};
        l.len = 3;
        l.c[0] = static_cast<gf::elem>(f.mul(a.c[1], b.c[2]) ^ f.mul(a.c[2], b.c[1]));
        l.c[1] = static_cast<gf::elem>(f.mul(a.c[2], b.c[0]) ^ f.mul(a.c[0], b.c[2]));
        l.c[2] = static_cast<gf::elem>(f.mul(a.c[0], b.c[1]) ^ f.mul(a.c[1], b.c[0]));
        return g->rank(g->normalize(l));
    }
};

/// Incremental completion state: members, plus for every point the number of
/// member pairs whose secant passes through it.  A non-member point on no
/// secant is exactly an addable one; the addable ranks are kept in a
/// constant-time indexed set so a uniform draw needs no scan.  Tracking
/// counts rather than a bitset lets a member be removed again, so the search
/// can perturb a finished arc cheaply instead of rebuilding its coverage
/// from scratch.
struct completion {
    static constexpr std::uint32_t npos = 0xffffffffu;

    const pg::geometry* g;
    const line_table* lines;  // optional accelerator
    bitvec member;
    std::vector<std::uint16_t> secants_through;
    std::vector<pg::point> members;
    std::vector<std::uint32_t> addable;      // ranks of addable points, unordered
    std::vector<std::uint32_t> addable_pos;  // rank -> index into addable, or npos

    explicit completion(const pg::geometry& geom, const line_table* table = nullptr)
        : g(&geom),
          lines(table),
          member(geom.point_count()),
          secants_through(geom.point_count(), 0),
          addable(geom.point_count()),
          addable_pos(geom.point_count()) {
        for (std::uint32_t i = 0; i < addable.size(); ++i) {
            addable[i] = i;
            addable_pos[i] = i;
        }
    }

    void addable_insert(std::uint32_t t) {
        if (addable_pos[t] != npos) return;
        addable_pos[t] = static_cast<std::uint32_t>(addable.size());
        addable.push_back(t);
    }
    void addable_erase(std::uint32_t t) {
        std::uint32_t i = addable_pos[t];
        if (i == npos) return;
        std::uint32_t last = addable.back();
        addable[i] = last;
        addable_pos[last] = i;
        addable.pop_back();
        addable_pos[t] = npos;
    }
    void cover(std::uint32_t t) {
        if (secants_through[t]++ == 0) addable_erase(t);
    }
    void uncover(std::uint32_t t) {
        if (--secants_through[t] == 0 && !member.test(t)) addable_insert(t);
    }

    template <class F>
    void for_secant(const pg::point& a, const pg::point& b, F&& f) const {
        if (lines) {
            const std::uint32_t* row =
                &lines->pts[static_cast<std::size_t>(lines->line_rank(a, b)) * lines->stride];
            for (unsigned i = 0; i < lines->stride; ++i) f(row[i]);
            return;
        }
        f(g->rank(a));
        f(g->rank(b));
        for (unsigned lambda = 1; lambda < g->q(); ++lambda)
            f(g->rank(
                g->normalize(pg::geometry::add(a, g->scalar_mul(static_cast<gf::elem>(lambda), b)))));
    }

    void add(const pg::point& p) {
        std::uint32_t rp = g->rank(p);
        for (const auto& a : members)
            for_secant(a, p, [this](std::uint32_t t) { cover(t); });
        addable_erase(rp);  // covers the first-member case, where no secant forms
        member.mark(rp);
        members.push_back(p);
    }

    void remove_member(std::size_t idx) {
        pg::point p = members[idx];
        std::uint32_t rp = g->rank(p);
        members[idx] = members.back();
        members.pop_back();
        member.reset(rp);
        for (const auto& a : members)
            for_secant(a, p, [this](std::uint32_t t) { uncover(t); });
        if (secants_through[rp] == 0) addable_insert(rp);
    }

    /// Adds uniformly random addable points until none remains.  Returns
    /// false (abandoning the pass) if an addable point still exists once the
    /// arc has `cap` members: any completion from there must exceed cap.
    bool run(rng& r, std::size_t cap = SIZE_MAX) {
        while (!addable.empty()) {
            if (members.size() >= cap) return false;
            add(g->unrank(addable[r.below(addable.size())]));
        }
        return true;
    }

    /// Fixed-size local search: swap one member for a uniformly random
    /// addable point, preferring states with fewer addable points left (an
    /// arc of this size is complete exactly when none remains).  Small
    /// uphill steps are accepted occasionally so the walk can leave basins.
    /// Returns true when the arc becomes complete within the move budget.
    bool descend(rng& r, unsigned moves) {
        if (members.size() < 3) return addable.empty();
        for (unsigned m = 0; m < moves; ++m) {
            if (addable.empty()) return true;
            std::size_t before = addable.size();
            std::size_t idx = r.below(members.size());
            pg::point removed = members[idx];
            remove_member(idx);
            add(g->unrank(addable[r.below(addable.size())]));
            std::size_t after = addable.size();
            bool accept = after <= before || (after == before + 1 && r.below(8) == 0) ||
                          (after == before + 2 && r.below(64) == 0);
            if (!accept) {
                remove_member(members.size() - 1);
                add(removed);
            }
        }
        return addable.empty();
    }
};

}  // namespace

plane_arc greedy_complete(const pg::geometry& g, const plane_arc& seed_arc, std::uint64_t master_seed,
                          unsigned iterations) {
    if (g.N() != 2) throw bad_parameters("greedy completion operates on plane arcs");
    if (iterations == 0) throw bad_parameters("greedy completion needs at least one pass");

    std::optional<line_table> table;
    if (line_table::fits(g)) table.emplace(g);
    const line_table* lt = table ? &*table : nullptr;

    // Pass 0 completes the seed cold.  Later passes re-complete a pool
    // member minus a few random points, abandoning any pass that can no
    // longer beat the record.  The pool keeps distinct record-size arcs for
    // diversity; a rare pass may accept a one-larger arc and hand it to the
    // next pass as a starting set, letting the walk cross between plateau
    // cells.  Occasional cold passes keep global diversity.
    std::vector<pg::point> best;
    bool have_best = false;
    std::vector<completion> pool;
    std::vector<std::uint64_t> pool_keys;
    std::size_t pool_next = 0;
    constexpr std::size_t pool_cap = 32;
    std::vector<completion> carry;  // empty or one entry

    auto key_of = [&g](const std::vector<pg::point>& pts) {
        std::vector<std::uint32_t> ranks;
        ranks.reserve(pts.size());
        for (const auto& p : pts) ranks.push_back(g.rank(p));
        std::sort(ranks.begin(), ranks.end());
        std::uint64_t h = 1469598103934665603ull;
        for (std::uint32_t v : ranks) {
            h ^= v;
            h *= 1099511628211ull;
        }
        return h;
    };
    auto pool_insert = [&](const completion& c) {
        std::uint64_t k = key_of(c.members);
        for (std::uint64_t existing : pool_keys)
            if (existing == k) return;
        if (pool.size() < pool_cap) {
            pool.push_back(c);
            pool_keys.push_back(k);
        } else {
            pool[pool_next] = c;
            pool_keys[pool_next] = k;
            pool_next = (pool_next + 1) % pool_cap;
        }
    };

    constexpr unsigned descent_moves = 4000;
    std::optional<completion> chain;  // persistent swap-descent state, one below the record
    std::size_t chain_best = 0;       // record size the chain was seeded under
    for (unsigned pass = 0; pass < iterations; ++pass) {
        rng r(master_seed, pass);
        const bool cold = pool.empty() || best.size() <= 6 || pass % 64 == 32;
        completion c(g, lt);
        if (!cold && pass % 2 == 1) {
            // Descent pass: hold a record arc minus one point at fixed size
            // and walk point swaps toward zero addable points.  Fresh passes
            // probe a new basin each time; chain passes keep their walk state
            // across passes so long plateaus can be crossed, reseeding when
            // the record moves or on a periodic refresh.
            const bool fresh = pass % 4 == 1;
            completion* w;
            if (fresh) {
                c = pool[r.below(pool.size())];
                c.remove_member(r.below(c.members.size()));
                w = &c;
            } else {
                if (!chain || chain_best != best.size() || pass % 512 == 3) {
                    chain = pool[r.below(pool.size())];
                    chain->remove_member(r.below(chain->members.size()));
                    chain_best = best.size();
                }
                w = &*chain;
            }
            if (w->descend(r, descent_moves)) {
                best = w->members;
                pool.clear();
                pool_keys.clear();
                pool_next = 0;
                carry.clear();
                pool_insert(*w);
                chain.reset();
            }
            continue;
        }
        if (cold) {
            for (const auto& p : seed_arc.pts) c.add(p);
        } else {
            if (!carry.empty()) {
                c = std::move(carry.back());
                carry.clear();
            } else {
                c = pool[r.below(pool.size())];
            }
            std::size_t u = r.below(16);
            std::size_t remove = u < 6 ? 1 : u < 11 ? 2 : u < 14 ? 3 : 4 + r.below(4);
            for (std::size_t t = 0; t < remove && c.members.size() > 1; ++t)
                c.remove_member(r.below(c.members.size()));
        }
        const bool allow_up = !cold && r.below(16) == 0;
        std::size_t cap = have_best ? best.size() + (allow_up ? 1 : 0) : SIZE_MAX;
        if (!c.run(r, cap)) continue;
        if (!have_best || c.members.size() < best.size()) {
            best = c.members;
            have_best = true;
            pool.clear();
            pool_keys.clear();
            pool_next = 0;
            carry.clear();
            pool_insert(c);
        } else if (c.members.size() == best.size()) {
            pool_insert(c);
        } else {
            carry.clear();
            carry.push_back(std::move(c));
        }
    }
    return make_plane_arc(g, std::move(best));
}

std::optional<beta1_result> find_beta1(const pg::geometry& g, const plane_arc& K, std::uint64_t seed,
                                       unsigned budget, unsigned max_p) {
    if (g.N() != 2) throw bad_parameters("the unique-sum-point search operates on plane arcs");
    const auto& f = g.field();
    const unsigned q = g.q();
    const std::uint64_t n = g.point_count();
    const std::size_t k = K.pts.size();
    if (k < 2) return std::nullopt;

    // Secant counts plus, for every covered point, one secant through it.
    std::vector<std::uint16_t> nsec(n, 0);
    std::vector<std::uint32_t> one_pair(n, 0);
    bitvec member(n);
    for (const auto& p : K.pts) member.mark(g.rank(p));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            std::uint32_t pair_id = static_cast<std::uint32_t>(i * k + j);
            auto visit = [&](const pg::point& t) {
                std::uint64_t r = g.rank(t);
                ++nsec[r];
                one_pair[r] = pair_id;
            };
            visit(K.pts[i]);
            visit(K.pts[j]);
            for (unsigned lambda = 1; lambda < q; ++lambda)
                visit(g.normalize(
                    pg::geometry::add(K.pts[i], g.scalar_mul(static_cast<gf::elem>(lambda), K.pts[j]))));
        }
    }

    unsigned attempts = 0;
    for (unsigned p_target = 1; p_target <= max_p; ++p_target) {
        for (std::uint64_t r = 0; r < n; ++r) {
            if (member.test(r) || nsec[r] != p_target) continue;
            pg::point T = g.unrank(r);
            const pg::point& P1 = K.pts[one_pair[r] / k];
            const pg::point& P2 = K.pts[one_pair[r] % k];

            // T = alpha P1 + beta P2: solve from two independent coordinates.
            gf::elem alpha = 0, beta = 0;
            {
                bool solved = false;
                for (unsigned c0 = 0; c0 < 3 && !solved; ++c0) {
                    for (unsigned c1 = c0 + 1; c1 < 3 && !solved; ++c1) {
                        gf::elem d = static_cast<gf::elem>(f.mul(P1.c[c0], P2.c[c1]) ^ f.mul(P1.c[c1], P2.c[c0]));
                        if (d == 0) continue;
                        gf::elem di = f.inv(d);
                        alpha = f.mul(di, static_cast<gf::elem>(f.mul(T.c[c0], P2.c[c1]) ^ f.mul(T.c[c1], P2.c[c0])));
                        beta = f.mul(di, static_cast<gf::elem>(f.mul(P1.c[c0], T.c[c1]) ^ f.mul(P1.c[c1], T.c[c0])));
                        solved = true;
                    }
                }
                if (!solved || alpha == 0 || beta == 0) continue;  // T not strictly between the pair
            }

            // Complete {P1, P2} to a basis with the first admissible unit vector.
            pg::point P3;
            {
                bool found = false;
                for (unsigned e = 0; e < 3 && !found; ++e) {
                    P3 = pg::point{};
                    P3.len = 3;
                    P3.c[e] = 1;
                    pg::projectivity B;
                    for (unsigned i = 0; i < 3; ++i) {
                        B.m[3 * i + 0] = P1.c[i];
                        B.m[3 * i + 1] = P2.c[i];
                        B.m[3 * i + 2] = P3.c[i];
                    }
                    if (pg::det(f, B) != 0) found = true;
                }
                if (!found) continue;
            }
            pg::projectivity Binv;
            {
                pg::projectivity B;
                for (unsigned i = 0; i < 3; ++i) {
                    B.m[3 * i + 0] = P1.c[i];
                    B.m[3 * i + 1] = P2.c[i];
                    B.m[3 * i + 2] = P3.c[i];
                }
                Binv = pg::inverse(f, B);
            }

            rng rr(seed, r);
            for (unsigned attempt = 0; attempt < 4; ++attempt) {
                if (attempts >= budget) return std::nullopt;
                ++attempts;
                // Images: P1 -> (0,0,beta), P2 -> (0,alpha,0), so the
                // normalized images sum to the image of T; the third basis
                // point goes to a random affine point.
                gf::elem r1 = static_cast<gf::elem>(rr.below(q));
                gf::elem r2 = static_cast<gf::elem>(rr.below(q));
                pg::projectivity C;
                C.m = {0, 0, 1, 0, alpha, r1, beta, 0, r2};
                pg::projectivity A = pg::compose(f, C, Binv);
                if (pg::det(f, A) == 0) continue;

                std::vector<pg::point> img;
                img.reserve(k);
                for (const auto& pt : K.pts) img.push_back(pg::apply_projectivity(g, A, pt, false));
                plane_arc arc;
                try {
                    arc = make_plane_arc(g, std::move(img));
                } catch (const not_an_arc&) {
                    continue;  // cannot happen for an invertible map; defensive
                }
                arc_profile prof = profile(g, arc);
                if (prof.beta != 1) continue;
                if (!prof.p || *prof.p != p_target) continue;
                return beta1_result{A, std::move(arc), std::move(prof)};
            }
        }
    }
    return std::nullopt;
}

conjecture_report conjecture_scan(const pg::geometry& g, unsigned trials, std::uint64_t rng_seed,
                                  unsigned search_budget) {
    if (g.N() != 2) throw bad_parameters("the scan operates on plane arcs");
    if (g.q() > 16) throw bad_parameters("the scan is limited to q <= 16");
    conjecture_report rep;
    rep.trials = trials;
    for (unsigned t = 0; t < trials; ++t) {
        rng r(rng_seed, t);
        std::uint64_t sub_seed = r.next();
        plane_arc arc = greedy_complete(g, plane_arc{}, sub_seed, 3);
        arc_profile prof = profile(g, arc);
        if (prof.beta == 1) {
            ++rep.beta1_direct;
            continue;
        }
        auto res = find_beta1(g, arc, sub_seed, search_budget, g.q());
        if (res)
            ++rep.beta1_found;
        else
            ++rep.failures;
    }
    return rep;
}

}  // namespace capforge::arcs
