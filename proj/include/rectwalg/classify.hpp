#pragma once

#include <optional>
#include <set>
#include <string>

#include "rectwalg/series.hpp"
#include "rectwalg/tableaux.hpp"

namespace rectwalg {

struct ClassificationResult {
    RowClass rc;
    SignData sd;
    bool findim_tableaux = false;
    bool findim_yangian = false;
    std::optional<Tableau> witness; // column-strict representative, when one exists
    std::string branch;             // which classification condition fired
    bool agree() const { return findim_tableaux == findim_yangian; }
};

/// Tableaux route: a column-strict representative of rc (l odd, or l even
/// with eps=+), or of the middle-column extension a_plus(rc) (l even, eps=-).
std::pair<bool, std::optional<Tableau>> is_findim_tableaux(const RowClass& rc,
                                                           const SignData& sd);

/// Twisted-Yangian route, dispatching on (phi, n parity, n=2).  Returns the
/// decision and the name of the condition that decided it.
std::pair<bool, std::string> is_findim_yangian(const RowClass& rc, const SignData& sd);

ClassificationResult classify_row_class(const RowClass& rc, const SignData& sd);

/// The component-group action on row classes: defined for (eps=-, n and l
/// even) and (eps=+, n even, l odd); throws std::domain_error otherwise.
RowClass c_action(const RowClass& rc, const SignData& sd);

/// The C-orbit {rc, c.rc} of a class.
std::set<RowClass> orbit(const RowClass& rc, const SignData& sd);

} // namespace rectwalg
