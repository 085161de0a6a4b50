#include "utcell/diagram.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>

namespace utcell {

char symbol_char(CellSymbol s) {
    switch (s) {
        case CellSymbol::Empty: return '.';
        case CellSymbol::Bullet: return '*';
        case CellSymbol::Otimes: return 'x';
        case CellSymbol::Plus: return '+';
        case CellSymbol::Minus: return '-';
    }
    return '?';
}

std::string symbol_name(CellSymbol s) {
    switch (s) {
        case CellSymbol::Empty: return "empty";
        case CellSymbol::Bullet: return "bullet";
        case CellSymbol::Otimes: return "otimes";
        case CellSymbol::Plus: return "plus";
        case CellSymbol::Minus: return "minus";
    }
    return "?";
}

CellSymbol Diagram::symbol(const Root& r) const {
    auto it = cells_.find(r);
    return it == cells_.end() ? CellSymbol::Empty : it->second;
}

CellSymbol Diagram::symbol_after_step(const Root& r, int step) const {
    auto it = fill_step_.find(r);
    if (it == fill_step_.end() || it->second > step) return CellSymbol::Empty;
    return cells_.at(r);
}

void Diagram::place(const Root& r, CellSymbol s, int step) {
    if (cells_.count(r))
        throw std::logic_error("Diagram::place: cell " + to_string(r) + " already filled");
    cells_[r] = s;
    fill_step_[r] = step;
}

std::vector<Root> Diagram::extension() const {
    std::vector<Root> out;
    for (const auto& [r, s] : cells_)
        if (s == CellSymbol::Otimes) out.push_back(r);
    return out;  // cells_ iterates in descending order already
}

std::string Diagram::render_text() const {
    std::ostringstream os;
    for (int row = 1; row <= n_; ++row) {
        for (int col = 1; col <= n_; ++col) {
            if (col > 1) os << ' ';
            os << (row > col ? symbol_char(symbol(Root{row, col})) : ' ');
        }
        os << '\n';
    }
    return os.str();
}

std::string Diagram::render_json() const {
    nlohmann::json j;
    j["n"] = n_;
    j["cells"] = nlohmann::json::array();
    for (const auto& [r, s] : cells_)
        j["cells"].push_back({{"root", {r.row, r.col}}, {"sym", symbol_name(s)}});
    j["extension"] = nlohmann::json::array();
    for (const Root& r : extension())
        j["extension"].push_back({r.row, r.col});
    return j.dump();
}

Diagram build_diagram(const BasicSubset& d) {
    Diagram dia(d.n);
    RootPartition part = classify(d);
    for (const Root& r : part.m_set)
        dia.place(r, CellSymbol::Bullet, 0);

    const std::vector<Root> order = all_positive_roots(d.n);
    int step = 0;
    for (;;) {
        auto it = std::find_if(order.begin(), order.end(), [&](const Root& r) {
            return dia.symbol(r) == CellSymbol::Empty;
        });
        if (it == order.end()) break;
        ++step;
        const Root xi = *it;
        dia.place(xi, CellSymbol::Otimes, step);
        DiagramStep st{step, xi, {}};
        // For each split xi = alpha + beta with col(alpha) = col(xi) and
        // row(beta) = row(xi): fill both when both are free, neither otherwise.
        for (int j = xi.col + 1; j < xi.row; ++j) {
            const Root alpha{j, xi.col};
            const Root beta{xi.row, j};
            if (dia.symbol(alpha) == CellSymbol::Empty && dia.symbol(beta) == CellSymbol::Empty) {
                dia.place(alpha, CellSymbol::Plus, step);
                dia.place(beta, CellSymbol::Minus, step);
                st.pairs.emplace_back(alpha, beta);
            }
        }
        dia.log_step(std::move(st));
    }
    return dia;
}

std::vector<Root> extension(const BasicSubset& d) {
    return build_diagram(d).extension();
}

RootSet a_set(const std::vector<Root>& ext, const Root& gamma) {
    RootSet out;
    for (const Root& r : ext)
        if (r.row == gamma.row && r.col < gamma.col) out.insert(r);
    return out;
}

RootSet a_set(const BasicSubset& d, const Root& gamma) {
    if (!gamma.positive())
        throw std::invalid_argument("a_set: root must be positive");
    return a_set(extension(d), gamma);
}

} // namespace utcell
