#include "ruscs/synth.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace ruscs {

namespace {

constexpr int kMaxDenomExp = 48; // int32 entries stay far from overflow

// ---------------------------------------------------------------------------
// Compact search state: the 4x2 columns share one denominator exponent k;
// entries are Gaussian integers small enough for int32 (column norms are
// exactly 2^k). Keeps child generation allocation-free.
// ---------------------------------------------------------------------------

struct CState {
    // (re, im) pairs over entries [row][col], row-major.
    std::array<std::int32_t, 16> v{};
    std::int16_t k = 0;
    std::int16_t phase = 0;

    bool operator==(const CState &o) const { return v == o.v && k == o.k && phase == o.phase; }
};

inline std::int32_t &re(CState &s, int row, int col) { return s.v[4 * row + 2 * col]; }
inline std::int32_t &im(CState &s, int row, int col) { return s.v[4 * row + 2 * col + 1]; }

inline bool all_entries_lambda_divisible(const CState &s)
{
    for (int i = 0; i < 8; ++i) {
        if (((s.v[2 * i] + s.v[2 * i + 1]) & 1) != 0) {
            return false;
        }
    }
    return true;
}

void canonicalize(CState &s)
{
    while (s.k > 0 && all_entries_lambda_divisible(s)) {
        for (int i = 0; i < 8; ++i) {
            std::int32_t a = s.v[2 * i];
            std::int32_t b = s.v[2 * i + 1];
            s.v[2 * i] = (a + b) / 2;
            s.v[2 * i + 1] = (b - a) / 2;
        }
        --s.k;
    }
    // Fold a power of i so the first nonzero entry has re > 0, im >= 0.
    for (int i = 0; i < 8; ++i) {
        std::int32_t a = s.v[2 * i];
        std::int32_t b = s.v[2 * i + 1];
        if (a == 0 && b == 0) {
            continue;
        }
        int rot = 0;
        while (!(a > 0 && b >= 0)) {
            std::int32_t t = a;
            a = -b;
            b = t;
            ++rot;
        }
        if (rot != 0) {
            for (int j = 0; j < 8; ++j) {
                std::int32_t x = s.v[2 * j];
                std::int32_t y = s.v[2 * j + 1];
                for (int r = 0; r < rot; ++r) {
                    std::int32_t t = x;
                    x = -y;
                    y = t;
                }
                s.v[2 * j] = x;
                s.v[2 * j + 1] = y;
            }
            s.phase = static_cast<std::int16_t>((((s.phase - 2 * rot) % 8) + 8) % 8);
        }
        return;
    }
}

int sde_sum(const CState &s)
{
    int total = 0;
    for (int i = 0; i < 8; ++i) {
        std::int32_t a = s.v[2 * i];
        std::int32_t b = s.v[2 * i + 1];
        if (a == 0 && b == 0) {
            continue;
        }
        int v = 0;
        while (v < s.k && ((a + b) & 1) == 0) {
            std::int32_t t = (a + b) / 2;
            b = (b - a) / 2;
            a = t;
            ++v;
        }
        total += s.k - v;
    }
    return total;
}

std::uint64_t hash_state(const CState &s)
{
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) {
        h ^= x;
        h *= 1099511628211ull;
    };
    for (std::int32_t x : s.v) {
        mix(static_cast<std::uint32_t>(x));
    }
    mix(static_cast<std::uint16_t>(s.k));
    mix(static_cast<std::uint16_t>(s.phase));
    return h;
}

// ---------------------------------------------------------------------------
// Moves: each applies the INVERSE matrix of its recorded gate on the left.
// The emitted circuit is the reversed move list.
// ---------------------------------------------------------------------------

enum MoveId : int {
    kH0 = 0,
    kH1,
    kS0,
    kS1,
    kX0,
    kX1,
    kCZ,
    kCNOT01,
    kCNOT10,
    kSWAP,
    kCS,
    kCSdg,
    kMoveCount,
    // Finishing moves used by finalize_monomial only.
    kSdg1,
    kZ1,
};

Gate move_gate(int m)
{
    switch (m) {
    case kH0:
        return g1(GateKind::H, 0);
    case kH1:
        return g1(GateKind::H, 1);
    case kS0:
        return g1(GateKind::S, 0);
    case kS1:
        return g1(GateKind::S, 1);
    case kX0:
        return g1(GateKind::X, 0);
    case kX1:
        return g1(GateKind::X, 1);
    case kCZ:
        return g2(GateKind::CZ, 0, 1);
    case kCNOT01:
        return g2(GateKind::CNOT, 0, 1);
    case kCNOT10:
        return g2(GateKind::CNOT, 1, 0);
    case kSWAP:
        return g2(GateKind::SWAP, 0, 1);
    case kCS:
        return g2(GateKind::CS, 0, 1);
    case kCSdg:
        return g2(GateKind::CSdg, 0, 1);
    case kSdg1:
        return g1(GateKind::Sdg, 1);
    case kZ1:
        return g1(GateKind::Z, 1);
    default:
        throw std::logic_error("unknown move id");
    }
}

// Multiply the entries of rows r0 (and r1 if >= 0) by i^ipow.
inline void rows_mul_i(CState &s, int r0, int r1, int ipow)
{
    const int rows[2] = {r0, r1};
    for (int ri = 0; ri < 2; ++ri) {
        int r = rows[ri];
        if (r < 0) {
            continue;
        }
        for (int c = 0; c < 2; ++c) {
            std::int32_t a = re(s, r, c);
            std::int32_t b = im(s, r, c);
            for (int j = 0; j < ipow; ++j) {
                std::int32_t t = a;
                a = -b;
                b = t;
            }
            re(s, r, c) = a;
            im(s, r, c) = b;
        }
    }
}

inline void rows_swap(CState &s, int r0, int r1)
{
    for (int c = 0; c < 2; ++c) {
        std::swap(re(s, r0, c), re(s, r1, c));
        std::swap(im(s, r0, c), im(s, r1, c));
    }
}

// H mixes the two row pairs (p0a,p0b) and (p1a,p1b); all four rows pick up
// one factor of 1/lambda, so the shared denominator grows by one.
inline void apply_hadamard(CState &s, int p0a, int p0b, int p1a, int p1b)
{
    const int pairs[2][2] = {{p0a, p0b}, {p1a, p1b}};
    for (const auto &p : pairs) {
        for (int c = 0; c < 2; ++c) {
            std::int32_t xa = re(s, p[0], c), xb = im(s, p[0], c);
            std::int32_t ya = re(s, p[1], c), yb = im(s, p[1], c);
            re(s, p[0], c) = xa + ya;
            im(s, p[0], c) = xb + yb;
            re(s, p[1], c) = xa - ya;
            im(s, p[1], c) = xb - yb;
        }
    }
    s.k = static_cast<std::int16_t>(s.k + 1);
    s.phase = static_cast<std::int16_t>((s.phase + 1) % 8);
}

// Returns false when the move would exceed the denominator cap.
bool apply_move(CState &s, int m)
{
    switch (m) {
    case kH0:
        if (s.k + 1 > kMaxDenomExp) {
            return false;
        }
        apply_hadamard(s, 0, 2, 1, 3);
        break;
    case kH1:
        if (s.k + 1 > kMaxDenomExp) {
            return false;
        }
        apply_hadamard(s, 0, 1, 2, 3);
        break;
    case kS0: // apply Sdg on qubit 0: rows 2,3 times -i
        rows_mul_i(s, 2, 3, 3);
        break;
    case kS1:
        rows_mul_i(s, 1, 3, 3);
        break;
    case kX0:
        rows_swap(s, 0, 2);
        rows_swap(s, 1, 3);
        break;
    case kX1:
        rows_swap(s, 0, 1);
        rows_swap(s, 2, 3);
        break;
    case kCZ:
        rows_mul_i(s, 3, -1, 2);
        break;
    case kCNOT01:
        rows_swap(s, 2, 3);
        break;
    case kCNOT10:
        rows_swap(s, 1, 3);
        break;
    case kSWAP:
        rows_swap(s, 1, 2);
        break;
    case kCS: // apply CSdg: row 3 times -i
        rows_mul_i(s, 3, -1, 3);
        break;
    case kCSdg: // apply CS: row 3 times i
        rows_mul_i(s, 3, -1, 1);
        break;
    case kSdg1: // apply S on qubit 1: rows 1,3 times i
        rows_mul_i(s, 1, 3, 1);
        break;
    case kZ1:
        rows_mul_i(s, 1, 3, 2);
        break;
    default:
        throw std::logic_error("unknown move id");
    }
    canonicalize(s);
    return true;
}

// ---------------------------------------------------------------------------
// Conversions between RMat4x2 and the compact form.
// ---------------------------------------------------------------------------

CState compact_from_cols(const RMat4x2 &cols, int phase_exp)
{
    int k = 0;
    for (const auto &row : cols) {
        for (const auto &e : row) {
            k = std::max(k, e.sde());
        }
    }
    if (k > kMaxDenomExp) {
        throw std::invalid_argument("synthesize: denominator exponent too large");
    }
    CState s;
    s.k = static_cast<std::int16_t>(k);
    s.phase = static_cast<std::int16_t>(((phase_exp % 8) + 8) % 8);
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 2; ++c) {
            const RingElem &e = cols[r][c];
            GaussianInt num = e.num() * lambda_pow(k - e.sde());
            // Column norms are at most 2^k <= 2^48; entries fit easily.
            if (abs(num.re()) > Integer(1) << 30 || abs(num.im()) > Integer(1) << 30) {
                throw std::invalid_argument("synthesize: entry numerator out of range");
            }
            re(s, r, c) = static_cast<std::int32_t>(num.re());
            im(s, r, c) = static_cast<std::int32_t>(num.im());
        }
    }
    canonicalize(s);
    return s;
}

bool columns_orthonormal(const CState &s)
{
    // Uses 64-bit arithmetic; valid for k <= kMaxDenomExp.
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            std::int64_t acc_re = 0, acc_im = 0;
            for (int r = 0; r < 4; ++r) {
                std::int64_t ar = s.v[4 * r + 2 * i], ai = s.v[4 * r + 2 * i + 1];
                std::int64_t br = s.v[4 * r + 2 * j], bi = s.v[4 * r + 2 * j + 1];
                acc_re += ar * br + ai * bi; // conj(a) * b
                acc_im += ar * bi - ai * br;
            }
            std::int64_t expect = i == j ? (std::int64_t{1} << s.k) : 0;
            if (acc_re != expect || acc_im != 0) {
                return false;
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Monomial completion.
// ---------------------------------------------------------------------------

const std::array<int, 4> &perm_of_move(int m)
{
    // new_row[r] = old_row[p[r]]
    static const std::map<int, std::array<int, 4>> table = {
        {kX0, {2, 3, 0, 1}},    {kX1, {1, 0, 3, 2}},  {kCNOT01, {0, 1, 3, 2}},
        {kCNOT10, {0, 3, 2, 1}}, {kSWAP, {0, 2, 1, 3}},
    };
    return table.at(m);
}

// Shortest move words realizing each row permutation, found once by BFS.
const std::map<std::array<int, 4>, std::vector<int>> &permutation_words()
{
    static const std::map<std::array<int, 4>, std::vector<int>> words = [] {
        std::map<std::array<int, 4>, std::vector<int>> out;
        std::array<int, 4> ident{0, 1, 2, 3};
        out[ident] = {};
        std::vector<std::array<int, 4>> frontier{ident};
        const int moves[] = {kX0, kX1, kCNOT01, kCNOT10, kSWAP};
        while (!frontier.empty()) {
            std::vector<std::array<int, 4>> next;
            for (const auto &pi : frontier) {
                for (int m : moves) {
                    const auto &pm = perm_of_move(m);
                    // Applying m after pi: new_row[r] = old_row[pi[pm[r]]].
                    std::array<int, 4> comp{pi[pm[0]], pi[pm[1]], pi[pm[2]], pi[pm[3]]};
                    if (out.find(comp) == out.end()) {
                        auto word = out.at(pi);
                        word.push_back(m);
                        out[comp] = std::move(word);
                        next.push_back(comp);
                    }
                }
            }
            frontier = std::move(next);
        }
        return out;
    }();
    return words;
}

std::vector<int> finalize_moves(const CState &state_in, CState &state_out)
{
    CState s = state_in;
    if (s.k != 0) {
        throw std::invalid_argument("finalize_monomial: entries must all have sde 0");
    }
    // Locate the single nonzero row of each column.
    int r0 = -1, r1 = -1;
    for (int r = 0; r < 4; ++r) {
        if (s.v[4 * r] != 0 || s.v[4 * r + 1] != 0) {
            if (r0 >= 0) {
                throw std::invalid_argument("finalize_monomial: column 0 is not monomial");
            }
            r0 = r;
        }
        if (s.v[4 * r + 2] != 0 || s.v[4 * r + 3] != 0) {
            if (r1 >= 0) {
                throw std::invalid_argument("finalize_monomial: column 1 is not monomial");
            }
            r1 = r;
        }
    }
    if (r0 < 0 || r1 < 0 || r0 == r1) {
        throw std::invalid_argument("finalize_monomial: columns are not orthonormal monomials");
    }

    std::vector<int> moves;
    // Permutation part: pick the shortest word with new_row 0 = old r0 and
    // new_row 1 = old r1 (two completions exist; ties break on word order).
    const auto &words = permutation_words();
    const std::vector<int> *best = nullptr;
    for (const auto &[pi, word] : words) {
        if (pi[0] == r0 && pi[1] == r1) {
            if (best == nullptr || word.size() < best->size() ||
                (word.size() == best->size() && word < *best)) {
                best = &word;
            }
        }
    }
    for (int m : *best) {
        apply_move(s, m);
        moves.push_back(m);
    }

    // Diagonal part: the units are now at rows 0 and 1. Align row 1's power
    // of i with row 0's using an S-type gate; rows 2 and 3 hold only zeros.
    auto unit_pow = [&](int row, int col) {
        std::int32_t a = s.v[4 * row + 2 * col];
        std::int32_t b = s.v[4 * row + 2 * col + 1];
        if (a == 1 && b == 0) {
            return 0;
        }
        if (a == 0 && b == 1) {
            return 1;
        }
        if (a == -1 && b == 0) {
            return 2;
        }
        if (a == 0 && b == -1) {
            return 3;
        }
        throw std::invalid_argument("finalize_monomial: entry is not a unit");
    };
    int a = unit_pow(0, 0);
    int b = unit_pow(1, 1);
    int m = ((a - b) % 4 + 4) % 4;
    if (m == 1) {
        apply_move(s, kSdg1);
        moves.push_back(kSdg1);
    }
    else if (m == 2) {
        apply_move(s, kZ1);
        moves.push_back(kZ1);
    }
    else if (m == 3) {
        apply_move(s, kS1);
        moves.push_back(kS1);
    }
    state_out = s;
    return moves;
}

// ---------------------------------------------------------------------------
// A* search.
// ---------------------------------------------------------------------------

struct Node {
    CState s;
    std::uint32_t parent;
    std::uint32_t next_same_hash;
    std::int16_t move; // move that produced this node, -1 for the root
    std::uint16_t g;
};

struct QueueEntry {
    double f;
    std::int32_t h_sum;
    std::uint16_t g;
    std::uint64_t hash;
    std::uint32_t idx;

    bool operator>(const QueueEntry &o) const
    {
        if (f != o.f) {
            return f > o.f;
        }
        if (h_sum != o.h_sum) {
            return h_sum > o.h_sum;
        }
        if (g != o.g) {
            return g > o.g;
        }
        if (hash != o.hash) {
            return hash > o.hash;
        }
        return idx > o.idx;
    }
};

constexpr std::uint32_t kNoNode = 0xffffffffu;

class Search {
  public:
    Search(const CState &start, const SynthOptions &opts) : opts_(opts)
    {
        nodes_.push_back(Node{start, kNoNode, kNoNode, -1, 0});
        remember(0);
        int h = sde_sum(start);
        open_.push(QueueEntry{score(0, h), h, 0, hash_state(start), 0});
    }

    // Returns the goal node index, or kNoNode when the budget ran out.
    std::uint32_t run(std::int64_t budget, std::int64_t &expanded)
    {
        expanded = 0;
        while (!open_.empty()) {
            QueueEntry top = open_.top();
            open_.pop();
            const CState cur = nodes_[top.idx].s; // copy: nodes_ reallocates
            if (cur.k == 0) {
                return top.idx;
            }
            if (expanded >= budget) {
                return kNoNode;
            }
            ++expanded;
            std::uint16_t g = nodes_[top.idx].g;
            for (int m = 0; m < kMoveCount; ++m) {
                CState child = cur;
                if (!apply_move(child, m)) {
                    continue;
                }
                if (lookup(child) != kNoNode) {
                    continue;
                }
                nodes_.push_back(Node{child, top.idx, kNoNode, static_cast<std::int16_t>(m),
                                      static_cast<std::uint16_t>(g + 1)});
                std::uint32_t idx = static_cast<std::uint32_t>(nodes_.size() - 1);
                remember(idx);
                int h = sde_sum(child);
                open_.push(
                    QueueEntry{score(g + 1, h), h, static_cast<std::uint16_t>(g + 1),
                               hash_state(child), idx});
            }
        }
        return kNoNode;
    }

    std::vector<int> path_moves(std::uint32_t goal) const
    {
        std::vector<int> moves;
        for (std::uint32_t idx = goal; nodes_[idx].move >= 0; idx = nodes_[idx].parent) {
            moves.push_back(nodes_[idx].move);
        }
        std::reverse(moves.begin(), moves.end());
        return moves;
    }

    const CState &state(std::uint32_t idx) const { return nodes_[idx].s; }

  private:
    double score(int g, int h_sum) const
    {
        return g + opts_.weight * (h_sum / opts_.heuristic_w);
    }

    void remember(std::uint32_t idx)
    {
        std::uint64_t h = hash_state(nodes_[idx].s);
        auto [it, inserted] = seen_.try_emplace(h, idx);
        if (!inserted) {
            std::uint32_t cur = it->second;
            while (nodes_[cur].next_same_hash != kNoNode) {
                cur = nodes_[cur].next_same_hash;
            }
            nodes_[cur].next_same_hash = idx;
        }
    }

    std::uint32_t lookup(const CState &s) const
    {
        auto it = seen_.find(hash_state(s));
        if (it == seen_.end()) {
            return kNoNode;
        }
        for (std::uint32_t cur = it->second; cur != kNoNode; cur = nodes_[cur].next_same_hash) {
            if (nodes_[cur].s == s) {
                return cur;
            }
        }
        return kNoNode;
    }

    SynthOptions opts_;
    std::vector<Node> nodes_;
    std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<QueueEntry>> open_;
    std::unordered_map<std::uint64_t, std::uint32_t> seen_;
};

} // namespace

RMat4x2 first_two_columns(const PhasedMatrix &m)
{
    RMat4x2 out;
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 2; ++c) {
            out[r][c] = m.mat[r][c];
        }
    }
    return out;
}

std::optional<int> match_columns_up_to_phase(const PhasedMatrix &product, const RMat4x2 &w_prime)
{
    RMat4x2 got = first_two_columns(product);
    // The represented columns are zeta8^phase * got. Ring entries can only
    // differ from W' by a power of i, i.e. an even zeta8 exponent.
    for (int j = 0; j < 4; ++j) {
        bool match = true;
        for (int r = 0; r < 4 && match; ++r) {
            for (int c = 0; c < 2 && match; ++c) {
                match = got[r][c] == w_prime[r][c].times_i_pow(j);
            }
        }
        if (match) {
            return (product.phase_exp + 2 * j) % 8;
        }
    }
    return std::nullopt;
}

const std::vector<Generator> &generators()
{
    static const std::vector<Generator> gens = [] {
        std::vector<Generator> out;
        for (int m = 0; m < kMoveCount; ++m) {
            Gate g = move_gate(m);
            out.push_back(Generator{g, gate_matrix(g), inverse_gate(g)});
        }
        return out;
    }();
    return gens;
}

double heuristic(const SynthState &s, double w)
{
    if (w <= 0) {
        throw std::invalid_argument("heuristic: w must be positive");
    }
    int total = 0;
    for (const auto &row : s.cols) {
        for (const auto &e : row) {
            total += e.sde();
        }
    }
    return total / w;
}

std::vector<Gate> finalize_monomial(const SynthState &s)
{
    for (const auto &row : s.cols) {
        for (const auto &e : row) {
            if (e.sde() != 0) {
                throw std::invalid_argument("finalize_monomial: entries must all have sde 0");
            }
        }
    }
    CState compact = compact_from_cols(s.cols, s.phase_exp);
    CState out_state;
    std::vector<int> moves = finalize_moves(compact, out_state);
    std::vector<Gate> gates;
    gates.reserve(moves.size());
    for (int m : moves) {
        gates.push_back(move_gate(m));
    }
    return gates;
}

SynthOutcome synthesize(const RMat4x2 &w_prime, const SynthOptions &opts)
{
    if (!is_isometry(w_prime)) {
        throw std::invalid_argument("synthesize: W' must satisfy W'^dag W' = I exactly");
    }
    CState start = compact_from_cols(w_prime, 0);
    if (!columns_orthonormal(start)) {
        throw std::logic_error("synthesize: compact state lost orthonormality");
    }

    SynthOutcome outcome;
    Search search(start, opts);
    std::uint32_t goal = search.run(opts.budget, outcome.nodes_expanded);
    if (goal == kNoNode) {
        return outcome; // budget exhausted
    }

    std::vector<int> moves = search.path_moves(goal);
    CState final_state;
    std::vector<int> tail = finalize_moves(search.state(goal), final_state);
    moves.insert(moves.end(), tail.begin(), tail.end());

    Circuit circuit;
    circuit.gates.reserve(moves.size());
    for (auto it = moves.rbegin(); it != moves.rend(); ++it) {
        circuit.gates.push_back(move_gate(*it));
    }

    // Soundness: re-evaluate the emitted circuit and match the columns
    // against zeta8^k W' exactly; the search result is never trusted.
    PhasedMatrix product = evaluate(circuit);
    auto k = match_columns_up_to_phase(product, w_prime);
    if (!k) {
        throw std::logic_error("synthesize: verification failed (internal error)");
    }
    outcome.ok = true;
    outcome.phase_exp = *k;
    outcome.circuit = std::move(circuit);
    return outcome;
}

SynthOutcome synthesize(const RMat4x2 &w_prime, std::int64_t budget)
{
    SynthOptions opts;
    opts.budget = budget;
    return synthesize(w_prime, opts);
}

} // namespace ruscs
