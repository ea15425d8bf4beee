#include "ekr/set_family.hpp"

#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ekr {

void SetFamily::validate() const {
    if (n < 1 || n > kMaxGroundSize || k < 1 || k > n) {
        throw std::domain_error("SetFamily: invalid (n,k)");
    }
    std::set<std::uint64_t> seen;
    for (const Subset& block : blocks) {
        if (block.size() != k) {
            throw std::domain_error("SetFamily: block has wrong cardinality");
        }
        if ((block.bits >> n) != 0) {
            throw std::domain_error("SetFamily: block has element outside [n]");
        }
        if (!seen.insert(block.bits).second) {
            throw std::domain_error("SetFamily: duplicate block");
        }
    }
}

SetFamily read_family(std::istream& in) {
    SetFamily family;
    bool have_header = false;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        if (!have_header) {
            std::string nf, kf;
            fields >> nf >> kf;
            if (nf.rfind("n=", 0) != 0 || kf.rfind("k=", 0) != 0) {
                throw std::domain_error("family file: expected 'n=<int> k=<int>' header");
            }
            try {
                family.n = std::stoi(nf.substr(2));
                family.k = std::stoi(kf.substr(2));
            } catch (const std::exception&) {
                throw std::domain_error("family file: malformed header '" + line + "'");
            }
            have_header = true;
            continue;
        }
        std::vector<int> elements;
        int e;
        while (fields >> e) elements.push_back(e);
        if (!fields.eof()) {
            throw std::domain_error("family file: non-integer token in block line '" + line + "'");
        }
        if (elements.empty()) continue;
        family.blocks.push_back(Subset::from_elements(elements, family.n));
    }
    if (!have_header) {
        throw std::domain_error("family file: missing 'n=<int> k=<int>' header");
    }
    family.validate();
    return family;
}

void write_family(std::ostream& out, const SetFamily& family) {
    out << "n=" << family.n << " k=" << family.k << "\n";
    for (const Subset& block : family.blocks) {
        bool first = true;
        for (int e : block.elements()) {
            if (!first) out << ' ';
            out << e;
            first = false;
        }
        out << "\n";
    }
}

} // namespace ekr
