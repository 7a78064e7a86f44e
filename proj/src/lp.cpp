#include "pack8/lp.hpp"

#include <algorithm>
#include <stdexcept>

namespace pack8 {

int LpModel::add_var(const Rat& lo, const Rat& hi) {
    if (lo > hi) throw std::invalid_argument("variable with empty bound range");
    lower.push_back(lo);
    upper.push_back(hi);
    return static_cast<int>(lower.size()) - 1;
}

void LpModel::add_row(std::vector<std::pair<int, Rat>> terms, Sense sense, const Rat& rhs) {
    rows.push_back(LpRow{std::move(terms), sense, rhs});
}

bool verify_farkas(const LpModel& model, const FarkasCertificate& cert) {
    if (cert.lambda.size() != model.rows.size()) return false;
    std::vector<Rat> combo(model.num_vars(), Rat(0));
    Rat rhs(0);
    for (std::size_t i = 0; i < model.rows.size(); ++i) {
        const Rat& l = cert.lambda[i];
        if (model.rows[i].sense == Sense::kLe && l < 0) return false;
        if (model.rows[i].sense == Sense::kGe && l > 0) return false;
        if (l == 0) continue;
        for (const auto& [v, c] : model.rows[i].terms) combo[v] += l * c;
        rhs += l * model.rows[i].rhs;
    }
    // The rows imply (combo . x) <= rhs on the feasible set; infeasibility is
    // proven when even the box minimum of the left side exceeds the right.
    Rat box_min(0);
    for (int v = 0; v < model.num_vars(); ++v) {
        if (combo[v] > 0)
            box_min += combo[v] * model.lower[v];
        else if (combo[v] < 0)
            box_min += combo[v] * model.upper[v];
    }
    return box_min > rhs;
}

Simplex::Simplex(const LpModel& model) : model_(model) {
    m_ = static_cast<int>(model.rows.size());
    n_struct_ = model.num_vars();
    // Columns: structural | slack per row | artificial per row (activated
    // only by phase 1, otherwise fixed at zero).
    n_total_ = n_struct_ + 2 * m_;
    tab_.assign(m_, std::vector<Rat>(n_total_ + 1, Rat(0)));
    cols_.resize(n_total_);
    for (int v = 0; v < n_struct_; ++v) cols_[v] = {model.lower[v], model.upper[v], true, true};
    for (int i = 0; i < m_; ++i) {
        const LpRow& row = model.rows[i];
        for (const auto& [v, c] : row.terms) tab_[i][v] += c;
        int s = n_struct_ + i;
        tab_[i][s] = 1;
        switch (row.sense) {
            case Sense::kLe: cols_[s] = {Rat(0), Rat(0), true, false}; break;  // s >= 0
            case Sense::kEq: cols_[s] = {Rat(0), Rat(0), true, true}; break;   // s = 0
            case Sense::kGe: cols_[s] = {Rat(0), Rat(0), false, true}; break;  // s <= 0
        }
        cols_[n_struct_ + m_ + i] = {Rat(0), Rat(0), true, true};  // artificial, fixed
        tab_[i][n_total_] = row.rhs;
    }
    basic_.resize(m_);
    row_of_.assign(n_total_, -1);
    at_up_.assign(n_total_, false);
    for (int v = 0; v < n_total_; ++v)
        if (!cols_[v].has_lo && cols_[v].has_up) at_up_[v] = true;
    for (int i = 0; i < m_; ++i) {
        basic_[i] = n_struct_ + i;
        row_of_[n_struct_ + i] = i;
    }
    // Nonbasic structurals rest at their lower bound.
    compute_values();
}

void Simplex::compute_values() {
    value_.assign(n_total_, Rat(0));
    for (int v = 0; v < n_total_; ++v) {
        if (row_of_[v] >= 0) continue;
        if (at_up_[v]) {
            value_[v] = cols_[v].has_up ? cols_[v].up : Rat(0);
        } else {
            value_[v] = cols_[v].has_lo ? cols_[v].lo : Rat(0);
        }
    }
    for (int i = 0; i < m_; ++i) {
        Rat x = tab_[i][n_total_];
        for (int v = 0; v < n_total_; ++v) {
            if (row_of_[v] >= 0 || v == basic_[i]) continue;
            if (value_[v] != 0) x -= tab_[i][v] * value_[v];
        }
        value_[basic_[i]] = x;
    }
}

void Simplex::pivot(int row, int col) {
    Rat p = tab_[row][col];
    if (p == 0) throw std::logic_error("pivot on zero");
    for (int v = 0; v <= n_total_; ++v) tab_[row][v] /= p;
    for (int i = 0; i < m_; ++i) {
        if (i == row) continue;
        Rat f = tab_[i][col];
        if (f == 0) continue;
        for (int v = 0; v <= n_total_; ++v) tab_[i][v] -= f * tab_[row][v];
    }
    int leaving = basic_[row];
    row_of_[leaving] = -1;
    basic_[row] = col;
    row_of_[col] = row;
}

std::vector<Rat> Simplex::reduced_costs(const std::vector<Rat>& cost, Rat& z) const {
    // red = c - c_B B^-1 A, using the maintained tableau rows B^-1 A.
    std::vector<Rat> red = cost;
    z = 0;
    for (int i = 0; i < m_; ++i) {
        const Rat& cb = cost[basic_[i]];
        if (cb == 0) continue;
        for (int v = 0; v < n_total_; ++v)
            if (tab_[i][v] != 0) red[v] -= cb * tab_[i][v];
        z += cb * value_[basic_[i]];
    }
    return red;
}

int Simplex::price(const std::vector<Rat>& red, bool bland) const {
    int best = -1;
    Rat best_mag(0);
    for (int v = 0; v < n_total_; ++v) {
        if (row_of_[v] >= 0) continue;
        const Col& c = cols_[v];
        if (c.has_lo && c.has_up && c.lo == c.up) continue;  // fixed
        bool up = at_up_[v];
        // From lower the variable may increase; from upper it may decrease.
        bool eligible = up ? red[v] > 0 : red[v] < 0;
        if (!eligible) continue;
        if (bland) return v;
        Rat mag = red[v] < 0 ? -red[v] : red[v];
        if (best < 0 || mag > best_mag) {
            best = v;
            best_mag = mag;
        }
    }
    return best;
}

namespace {
struct Ratio {
    bool unbounded = true;
    Rat t;
    int row = -1;       // leaving row, or -1 for a bound flip
    bool to_upper = false;  // leaving variable lands on its upper bound
};
}  // namespace

LpResult Simplex::solve_min(std::vector<Rat> cost) {
    cost.resize(n_total_, Rat(0));
    Rat z;
    std::vector<Rat> red = reduced_costs(cost, z);
    long iter = 0, degenerate = 0;
    for (;;) {
        if (++iter > 20000) throw std::runtime_error("simplex iteration limit");
        bool bland = degenerate > 40;
        int enter = price(red, bland);
        if (enter < 0) break;
        int dir = at_up_[enter] ? -1 : 1;
        Ratio r;
        // The entering variable's own opposite bound.
        if (cols_[enter].has_lo && cols_[enter].has_up) {
            r = Ratio{false, cols_[enter].up - cols_[enter].lo, -1, false};
        }
        for (int i = 0; i < m_; ++i) {
            Rat coef = tab_[i][enter] * dir;
            if (coef == 0) continue;
            int bv = basic_[i];
            // Basic value moves by -coef * t.
            if (coef > 0 && cols_[bv].has_lo) {
                Rat limit = (value_[bv] - cols_[bv].lo) / coef;
                bool better = r.unbounded || limit < r.t ||
                              (bland && limit == r.t && r.row >= 0 && bv < basic_[r.row]);
                if (better) r = Ratio{false, limit, i, false};
            } else if (coef < 0 && cols_[bv].has_up) {
                Rat limit = (cols_[bv].up - value_[bv]) / (-coef);
                bool better = r.unbounded || limit < r.t ||
                              (bland && limit == r.t && r.row >= 0 && bv < basic_[r.row]);
                if (better) r = Ratio{false, limit, i, true};
            }
        }
        if (r.unbounded) {
            LpResult out;
            out.status = LpStatus::kUnbounded;
            return out;
        }
        if (r.t == 0) ++degenerate; else degenerate = 0;
        if (r.row < 0) {
            at_up_[enter] = !at_up_[enter];  // bound flip
            compute_values();
            continue;
        }
        int leave = basic_[r.row];
        pivot(r.row, enter);
        at_up_[leave] = r.to_upper;
        at_up_[enter] = false;
        compute_values();
        red = reduced_costs(cost, z);
    }
    LpResult out;
    out.status = LpStatus::kOptimal;
    Rat total(0);
    for (int v = 0; v < n_total_; ++v)
        if (cost[v] != 0) total += cost[v] * value_[v];
    out.value = total;
    out.point.assign(value_.begin(), value_.begin() + n_struct_);
    return out;
}

bool Simplex::ensure_feasible(LpResult& out) {
    if (feasible_known_) return true;
    if (infeasible_cert_) {
        out.status = LpStatus::kInfeasible;
        out.farkas = infeasible_cert_;
        return false;
    }
    // Phase 1 with artificial variables, on the still-virgin tableau: every
    // row whose slack starts outside its bounds gets an artificial column
    // carrying the violation; minimizing their sum either reaches zero or
    // proves infeasibility (certified by the independent certificate LP).
    compute_values();
    std::vector<Rat> cost(n_total_, Rat(0));
    bool any = false;
    for (int i = 0; i < m_; ++i) {
        int s = n_struct_ + i;
        int a = n_struct_ + m_ + i;
        if (basic_[i] != s) throw std::logic_error("phase 1 requires the initial basis");
        Rat v = value_[s];
        Rat target;
        if (cols_[s].has_lo && v < cols_[s].lo)
            target = cols_[s].lo;
        else if (cols_[s].has_up && v > cols_[s].up)
            target = cols_[s].up;
        else
            continue;
        // Pin the slack at the violated bound and park the violation in the
        // artificial. The row is negated when the violation is negative so
        // the artificial enters with a unit column, as the basis bookkeeping
        // assumes.
        Rat violation = v - target;  // signed
        if (violation < 0) {
            for (int c = 0; c <= n_total_; ++c) tab_[i][c] = -tab_[i][c];
        }
        tab_[i][a] = 1;
        cols_[a] = {Rat(0), Rat(0), true, false};  // a >= 0
        basic_[i] = a;
        row_of_[a] = i;
        row_of_[s] = -1;
        at_up_[s] = (cols_[s].has_up && target == cols_[s].up);
        cost[a] = 1;
        any = true;
    }
    compute_values();
    if (any) {
        LpResult phase1 = solve_min(cost);
        if (phase1.status == LpStatus::kUnbounded)
            throw std::logic_error("phase-1 objective unbounded");
        Rat total(0);
        for (int i = 0; i < m_; ++i) {
            int a = n_struct_ + m_ + i;
            total += value_[a] < 0 ? -value_[a] : value_[a];
        }
        if (total > 0) {
            auto cert = search_certificate();
            if (!cert || !verify_farkas(model_, *cert))
                throw std::logic_error("infeasible phase 1 without a verified certificate");
            infeasible_cert_ = cert;
            out.status = LpStatus::kInfeasible;
            out.farkas = cert;
            return false;
        }
        // Freeze the artificials at zero for phase 2.
        for (int i = 0; i < m_; ++i) {
            int a = n_struct_ + m_ + i;
            cols_[a] = {Rat(0), Rat(0), true, true};
        }
        compute_values();
    }
    feasible_known_ = true;
    return true;
}

std::optional<FarkasCertificate> Simplex::search_certificate() {
    // Farkas alternative as an LP in (lambda, mu+, mu-): the combined row
    // sum_i lambda_i A_i must decompose as mu+ - mu-, and the gap
    //   G = sum_v (mu+_v l_v - mu-_v u_v) - sum_i lambda_i b_i
    // must be positive for some scaled multipliers. Certificates scale, so
    // lambda in [-1,1] loses nothing, and the LP is feasible at zero: the
    // feasibility phase of the nested solve never recurses.
    int m = m_, n = n_struct_;
    LpModel aux;
    // lambda_i = pos_i - neg_i with pos, neg in [0,1]; every variable rests
    // at zero, so the all-zero point is a feasible warm start and the nested
    // solve never re-enters phase 1.
    std::vector<int> pos(m, -1), neg(m, -1), mup(n), mum(n);
    for (int i = 0; i < m; ++i) {
        Sense sense = model_.rows[i].sense;
        if (sense != Sense::kGe) pos[i] = aux.add_var(Rat(0), Rat(1));
        if (sense != Sense::kLe) neg[i] = aux.add_var(Rat(0), Rat(1));
    }
    std::vector<Rat> colsum(n, Rat(0));
    for (const auto& row : model_.rows)
        for (const auto& [v, c] : row.terms) colsum[v] += (c < 0 ? -c : c);
    for (int v = 0; v < n; ++v) {
        mup[v] = aux.add_var(Rat(0), colsum[v]);
        mum[v] = aux.add_var(Rat(0), colsum[v]);
    }
    for (int v = 0; v < n; ++v) {
        std::vector<std::pair<int, Rat>> terms;
        for (int i = 0; i < m; ++i) {
            Rat c(0);
            for (const auto& [w, cc] : model_.rows[i].terms)
                if (w == v) c += cc;
            if (c == 0) continue;
            if (pos[i] >= 0) terms.emplace_back(pos[i], c);
            if (neg[i] >= 0) terms.emplace_back(neg[i], -c);
        }
        terms.emplace_back(mup[v], Rat(-1));
        terms.emplace_back(mum[v], Rat(1));
        aux.add_row(std::move(terms), Sense::kEq, Rat(0));
    }
    std::vector<std::pair<int, Rat>> gap;
    for (int v = 0; v < n; ++v) {
        if (model_.lower[v] != 0) gap.emplace_back(mup[v], model_.lower[v]);
        if (model_.upper[v] != 0) gap.emplace_back(mum[v], -model_.upper[v]);
    }
    for (int i = 0; i < m; ++i) {
        const Rat& b = model_.rows[i].rhs;
        if (b == 0) continue;
        if (pos[i] >= 0) gap.emplace_back(pos[i], -b);
        if (neg[i] >= 0) gap.emplace_back(neg[i], b);
    }
    Simplex solver(aux);
    LpResult r = solver.maximize(gap);
    if (r.status != LpStatus::kOptimal || r.value <= 0) return std::nullopt;
    FarkasCertificate cert;
    cert.lambda.assign(m, Rat(0));
    for (int i = 0; i < m; ++i) {
        if (pos[i] >= 0) cert.lambda[i] += r.point[pos[i]];
        if (neg[i] >= 0) cert.lambda[i] -= r.point[neg[i]];
    }
    return cert;
}

LpResult Simplex::minimize(const std::vector<std::pair<int, Rat>>& objective) {
    LpResult out;
    if (!ensure_feasible(out)) return out;
    std::vector<Rat> cost(n_total_, Rat(0));
    for (const auto& [v, c] : objective) cost[v] += c;
    return solve_min(std::move(cost));
}

LpResult Simplex::maximize(const std::vector<std::pair<int, Rat>>& objective) {
    std::vector<std::pair<int, Rat>> neg;
    neg.reserve(objective.size());
    for (const auto& [v, c] : objective) neg.emplace_back(v, -c);
    LpResult out = minimize(neg);
    if (out.status == LpStatus::kOptimal) out.value = -out.value;
    return out;
}

LpResult Simplex::check_feasible() {
    LpResult out;
    if (!ensure_feasible(out)) return out;
    out.status = LpStatus::kOptimal;
    out.value = 0;
    out.point.assign(value_.begin(), value_.begin() + n_struct_);
    return out;
}

}  // namespace pack8
