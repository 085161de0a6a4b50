#ifndef UTCELL_DIAGRAM_HPP
#define UTCELL_DIAGRAM_HPP

#include "utcell/root.hpp"

#include <map>
#include <string>
#include <vector>

namespace utcell {

enum class CellSymbol { Empty, Bullet, Otimes, Plus, Minus };

char symbol_char(CellSymbol s);
std::string symbol_name(CellSymbol s);

struct DiagramStep {
    int index = 0;                              // 1-based; step 0 places the bullets
    Root xi;                                    // cell that received the cross
    std::vector<std::pair<Root, Root>> pairs;   // (plus, minus) cells filled at this step
};

// Grid produced by the greedy filling procedure. Cells are written once and
// never overwritten; the cross cells, in descending order, form the
// extension of the generating basic subset.
class Diagram {
public:
    Diagram(int n) : n_(n) {}

    int n() const { return n_; }

    CellSymbol symbol(const Root& r) const;
    // State of the grid once the first `step` steps have run (step 0 = bullets).
    CellSymbol symbol_after_step(const Root& r, int step) const;

    const std::vector<DiagramStep>& steps() const { return steps_; }
    std::vector<Root> extension() const;

    std::string render_text() const;
    std::string render_json() const;

    void place(const Root& r, CellSymbol s, int step);
    void log_step(DiagramStep st) { steps_.push_back(std::move(st)); }

private:
    int n_;
    std::map<Root, CellSymbol, SuccDesc> cells_;
    std::map<Root, int, SuccDesc> fill_step_;
    std::vector<DiagramStep> steps_;
};

Diagram build_diagram(const BasicSubset& d);

std::vector<Root> extension(const BasicSubset& d);

// Cross cells strictly to the left of gamma in its row.
RootSet a_set(const BasicSubset& d, const Root& gamma);
RootSet a_set(const std::vector<Root>& ext, const Root& gamma);

} // namespace utcell

#endif
