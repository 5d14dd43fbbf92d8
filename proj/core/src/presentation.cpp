#include "grlie/presentation.hpp"

#include <atomic>
#include <thread>

#include "grlie/errors.hpp"
#include "grlie/log.hpp"

namespace grlie {

void validate(const GradedPresentation& p) {
    const auto& alphabet = p.alphabet();
    for (std::size_t i = 0; i < p.relations().size(); ++i) {
        const LieElement& r = p.relations()[i];
        for (const auto& [w, c] : r.coeffs()) {
            int actual;
            try {
                actual = weight_of(w, alphabet);
            } catch (const AlphabetMismatchError&) {
                throw InhomogeneousRelationError("relation " + std::to_string(i) +
                                                 " uses symbols outside the declared alphabet");
            }
            if (actual != r.degree())
                throw InhomogeneousRelationError(
                    "relation " + std::to_string(i) + " is inhomogeneous: declared degree " +
                    std::to_string(r.degree()) + ", found word '" + to_string(w, alphabet) +
                    "' of degree " + std::to_string(actual));
            if (!is_lyndon(w))
                throw InhomogeneousRelationError("relation " + std::to_string(i) +
                                                 " has a non-Lyndon coordinate word");
        }
    }
}

IdealCache::IdealCache(GradedPresentation presentation, int threads)
    : pres_(std::move(presentation)), fla_(pres_.alphabet()), threads_(threads) {
    validate(pres_);
}

void IdealCache::ensure(int degree) {
    if (degree < 0) throw ParamError("ensure: negative degree");
    while (built_degree() < degree) extend_one();
}

void IdealCache::extend_one() {
    const int d = built_degree() + 1;
    const int ambient = static_cast<int>(fla_.basis(d).size());
    IntegerLattice lattice(ambient);
    DegreeHistory hist;

    for (const LieElement& r : pres_.relations()) {
        if (r.degree() != d) continue;
        lattice.insert(fla_.coords(r));
        ++hist.relation_rows;
    }

    // closure rows: every generator bracketed with the basis of the matching
    // lower component
    struct Task {
        int gen;
        int lower_degree;
        std::size_t basis_row;
    };
    std::vector<Task> tasks;
    for (int g = 0; g < pres_.alphabet().size(); ++g) {
        const int lower = d - pres_.alphabet().weight(g);
        if (lower < 1) continue;
        const auto& base = ideals_[static_cast<std::size_t>(lower - 1)].basis();
        for (std::size_t r = 0; r < base.size(); ++r) tasks.push_back({g, lower, r});
    }

    std::vector<std::vector<Int>> images(tasks.size());
    auto compute = [&](std::size_t t) {
        const Task& task = tasks[t];
        const auto& base = ideals_[static_cast<std::size_t>(task.lower_degree - 1)].basis();
        LieElement v = fla_.from_coords(task.lower_degree, base[task.basis_row]);
        images[t] = fla_.coords(fla_.bracket(fla_.generator(task.gen), v));
    };

    int workers = threads_ > 0 ? threads_ : 1;
    if (workers > 1 && tasks.size() > 1) {
        std::vector<std::thread> pool;
        std::atomic<std::size_t> next{0};
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t t = next.fetch_add(1); t < tasks.size(); t = next.fetch_add(1))
                    compute(t);
            });
        for (auto& th : pool) th.join();
    } else {
        for (std::size_t t = 0; t < tasks.size(); ++t) compute(t);
    }

    for (auto& img : images) {
        lattice.insert(std::move(img));
        ++hist.closure_rows;
    }

    hist.rank = lattice.rank();
    GRLIE_LOG_DEBUG("ideal degree " + std::to_string(d) + ": ambient " + std::to_string(ambient) +
                    ", rank " + std::to_string(hist.rank) + " (" +
                    std::to_string(hist.relation_rows) + " relation rows, " +
                    std::to_string(hist.closure_rows) + " closure rows)");
    ideals_.push_back(std::move(lattice));
    history_.push_back(hist);
}

const IntegerLattice& IdealCache::ideal_component(int degree) {
    if (degree < 1) throw ParamError("ideal_component: degree must be >= 1");
    ensure(degree);
    return ideals_[static_cast<std::size_t>(degree - 1)];
}

AbelianInvariants IdealCache::quotient_component(int degree) {
    const IntegerLattice& lattice = ideal_component(degree);
    return cokernel_invariants(lattice.ambient_rank(), lattice.basis_matrix());
}

bool IdealCache::element_in_ideal(const LieElement& e) {
    fla_.check_element(e);
    if (e.degree() < 1) throw ParamError("element_in_ideal: degree must be >= 1");
    return ideal_component(e.degree()).contains(fla_.coords(e));
}

const IdealCache::DegreeHistory& IdealCache::history(int degree) const {
    if (degree < 1 || degree > built_degree())
        throw ParamError("history: degree not built");
    return history_[static_cast<std::size_t>(degree - 1)];
}

}  // namespace grlie
