/*
   Copyright 2026 The recip Authors

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

// Small tour of the library.

#include <iostream>

#include "recip/recip.hpp"

int main() {
    using namespace recip;

    const Field k = Field::prime(5);
    const auto f = parse_rational("(t^2+1)/(t-2)", k);
    const auto g = parse_rational("t^3 + 2", k);
    std::cout << "f = " << f.to_string() << "\ng = " << g.to_string() << "\n";

    const auto rep = weil_check(f, g);
    for (const auto& p : rep.points)
        std::cout << "  " << p.point.to_string() << "  deg " << p.point.degree() << "  tame " << p.tame << "\n";
    std::cout << "product of tame symbols: " << rep.product << "\n";

    const auto h = hilbert_check(f, g, 4);
    std::cout << "product of Hilbert symbols (m = 4): " << h.product << "\n";

    std::cout << "degree sum of f: " << f.degree_sum() << "\n";

    const auto c = commutator_check(parse_rational("t", k), parse_rational("3", k));
    std::cout << "{t, 3} from lifts: " << c.value << ", closed form: " << c.oracle << "\n";

    const auto ex = glk_example(Field::prime(7), 2, 3, 4);
    std::cout << "2x2 example over F_7: sigma~tau~ = " << ex.odd.sigma_tau << " on V1, commutators "
              << ex.odd.commutator << " and " << ex.even.commutator << "\n";
    return 0;
}
