#pragma once

#include <optional>
#include <vector>

#include "pack8/interval.hpp"

namespace pack8 {

enum class Sense { kLe, kEq, kGe };
enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpRow {
    std::vector<std::pair<int, Rat>> terms;  // (variable, coefficient)
    Sense sense = Sense::kLe;
    Rat rhs;
};

struct LpModel {
    std::vector<Rat> lower, upper;  // finite box bounds, one per variable
    std::vector<LpRow> rows;

    int add_var(const Rat& lo, const Rat& hi);
    void add_row(std::vector<std::pair<int, Rat>> terms, Sense sense, const Rat& rhs);
    int num_vars() const { return static_cast<int>(lower.size()); }
};

// Multipliers proving infeasibility: lambda_i >= 0 for <=-rows, <= 0 for
// >=-rows, free for =-rows, such that min over the box of (sum_i lambda_i
// A_i) x exceeds sum_i lambda_i b_i.
struct FarkasCertificate {
    std::vector<Rat> lambda;
};

bool verify_farkas(const LpModel& model, const FarkasCertificate& cert);

struct LpResult {
    LpStatus status = LpStatus::kOptimal;
    Rat value;
    std::vector<Rat> point;
    std::optional<FarkasCertificate> farkas;
};

// Dense exact-rational simplex with bounded variables. Dantzig pricing with a
// Bland fallback against cycling; the basis persists across solves so that
// per-variable bound sweeps warm-start.
class Simplex {
public:
    explicit Simplex(const LpModel& model);

    LpResult minimize(const std::vector<std::pair<int, Rat>>& objective);
    LpResult maximize(const std::vector<std::pair<int, Rat>>& objective);
    LpResult check_feasible();

private:
    struct Col {
        Rat lo, up;
        bool has_lo = true, has_up = true;
    };

    LpResult solve_min(std::vector<Rat> cost);
    bool ensure_feasible(LpResult& out);
    std::optional<FarkasCertificate> search_certificate();
    int price(const std::vector<Rat>& red, bool bland) const;
    void pivot(int row, int col);
    void compute_values();
    std::vector<Rat> reduced_costs(const std::vector<Rat>& cost, Rat& z) const;

    const LpModel& model_;
    int m_, n_struct_, n_total_;
    std::vector<std::vector<Rat>> tab_;  // m x (n_total + 1), rhs last
    std::vector<Col> cols_;
    std::vector<int> basic_;     // row -> var
    std::vector<int> row_of_;    // var -> row or -1
    std::vector<bool> at_up_;    // nonbasic rest position
    std::vector<Rat> value_;     // current value per var
    bool feasible_known_ = false;
    std::optional<FarkasCertificate> infeasible_cert_;
};

}  // namespace pack8
