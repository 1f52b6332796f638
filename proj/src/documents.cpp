#include "eac/documents.hpp"

#include <sstream>

namespace eac {

namespace {

void print_block(std::ostringstream& out, const std::string& name,
                 const std::vector<Polynomial>& polys) {
    out << "  " << name << " {";
    if (polys.empty()) {
        out << " }\n";
        return;
    }
    out << "\n";
    for (const auto& p : polys) out << "    " << p.str() << ";\n";
    out << "  }\n";
}

} // namespace

std::string irreducible_name(IrreducibleOpt o) {
    switch (o) {
    case IrreducibleOpt::None: return "none";
    case IrreducibleOpt::V: return "V";
    case IrreducibleOpt::W: return "W";
    case IrreducibleOpt::Both: return "both";
    }
    return "?";
}

VarietyPair PairDocument::to_pair() const {
    bool vi = irreducible == IrreducibleOpt::V || irreducible == IrreducibleOpt::Both;
    bool wi = irreducible == IrreducibleOpt::W || irreducible == IrreducibleOpt::Both;
    return VarietyPair(Ideal(ring_x, v_polys), Ideal(ring_y, w_polys), vi, wi);
}

std::optional<Ideal> PairDocument::x_removal() const {
    if (!v_prime) return std::nullopt;
    return Ideal(ring_x, *v_prime);
}

std::optional<Ideal> PairDocument::y_removal() const {
    if (!w_prime) return std::nullopt;
    return Ideal(ring_y, *w_prime);
}

std::string PairDocument::print() const {
    std::ostringstream out;
    out << "pair {\n";
    out << "  n = " << n << ";\n";
    print_block(out, "V", v_polys);
    print_block(out, "W", w_polys);
    if (v_prime) print_block(out, "Vprime", *v_prime);
    if (w_prime) print_block(out, "Wprime", *w_prime);
    if (irreducible != IrreducibleOpt::Both)
        out << "  irreducible = " << irreducible_name(irreducible) << ";\n";
    if (height) out << "  height = " << *height << ";\n";
    if (kcap) out << "  kcap = " << *kcap << ";\n";
    if (seed) out << "  seed = " << *seed << ";\n";
    out << "}\n";
    return out.str();
}

bool PairDocument::operator==(const PairDocument& other) const {
    return n == other.n && v_polys == other.v_polys && w_polys == other.w_polys &&
           v_prime == other.v_prime && w_prime == other.w_prime &&
           irreducible == other.irreducible && height == other.height &&
           kcap == other.kcap && seed == other.seed;
}

Configuration ConfigDocument::to_configuration(int default_height) const {
    std::vector<bool> mask(n, false);
    for (int i : kernel) mask[i] = true;
    return Configuration(Ideal(ring_x, x_polys), Ideal(ring_y, y_polys), lin, mask,
                         height.value_or(default_height), gen_names);
}

std::string ConfigDocument::print() const {
    std::ostringstream out;
    out << "config {\n";
    if (gen_names.empty()) {
        out << "  n = " << n << ";\n";
    } else {
        out << "  gens {";
        for (const auto& g : gen_names) out << " " << g;
        out << " }\n";
    }
    print_block(out, "X", x_polys);
    print_block(out, "Y", y_polys);
    if (lin.rows() > 0) {
        out << "  lin {\n";
        for (int i = 0; i < lin.rows(); ++i) {
            out << "   ";
            for (int j = 0; j < lin.cols(); ++j) out << " " << to_string(lin.at(i, j));
            out << ";\n";
        }
        out << "  }\n";
    }
    if (!kernel.empty()) {
        out << "  kernel {";
        for (int i : kernel) out << " " << (i + 1);
        out << " }\n";
    }
    if (height) out << "  height = " << *height << ";\n";
    out << "}\n";
    return out.str();
}

bool ConfigDocument::operator==(const ConfigDocument& other) const {
    return n == other.n && gen_names == other.gen_names && x_polys == other.x_polys &&
           y_polys == other.y_polys && lin == other.lin && kernel == other.kernel &&
           height == other.height;
}

std::string print_document(const Document& doc) {
    if (std::holds_alternative<PairDocument>(doc))
        return std::get<PairDocument>(doc).print();
    return std::get<ConfigDocument>(doc).print();
}

PairDocument document_of_pair(const VarietyPair& pair) {
    PairDocument doc;
    doc.n = pair.n();
    doc.ring_x = Ring::make(doc.n, "x");
    doc.ring_y = Ring::make(doc.n, "y");
    std::vector<int> embed(doc.n);
    for (int i = 0; i < doc.n; ++i) embed[i] = i;
    for (const auto& g : pair.variety_x().generators())
        doc.v_polys.push_back(g.remap(doc.ring_x, embed));
    for (const auto& g : pair.variety_y().generators())
        doc.w_polys.push_back(g.remap(doc.ring_y, embed));
    bool vi = pair.x_irreducible_assumed(), wi = pair.y_irreducible_assumed();
    doc.irreducible = vi && wi   ? IrreducibleOpt::Both
                      : vi       ? IrreducibleOpt::V
                      : wi       ? IrreducibleOpt::W
                                 : IrreducibleOpt::None;
    return doc;
}

} // namespace eac
