/*
   Copyright 2026 The grasspole Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Builds a nondegenerate 2x2 system of degree 4 over F_101, then places the poles at 1, 2, 3, 4.

#include <iostream>

#include "grasspole/grasspole.hpp"

using namespace grasspole;

int main() {
    const FieldHandle F = gf(101);
    const FactoredSystem fs = main_theorem_system(2, 2, F).to_factored();
    std::cout << "M(s) =\n" << to_json(fs.M()).dump() << "\n";
    std::cout << "exact test: " << to_string(is_degenerate_exact(fs).verdict) << "\n";

    Poly target = Poly::constant(Scalar::one(F));
    for (int r = 1; r <= 4; ++r) target *= Poly::from_ints(F, {-r, 1});
    const FiberSolution sol = fiber_solve_2x2(fs, target);
    std::cout << "target " << target.to_string() << ": " << sol.total_multiplicity << " solutions over the closure";
    if (!sol.extension_field.empty()) std::cout << " (in " << sol.extension_field << ")";
    std::cout << "\n";
    for (const auto& e : sol.entries) {
        std::cout << "  [K1 K2] = " << to_json(e.compensator).dump();
        if (e.feedback) std::cout << "  K = " << to_json(*e.feedback).dump();
        std::cout << (e.charpoly_matches ? "  ok" : "  MISMATCH") << "\n";
    }
    return 0;
}
