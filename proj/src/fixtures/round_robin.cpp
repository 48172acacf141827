#include <stdexcept>

#include "psym/automata/constructions.hpp"
#include "psym/fixtures/fixtures.hpp"
#include "psym/model/letter.hpp"

namespace psym {

Transducer gen_round_robin(std::size_t k, RoundRobinInit init) {
    if (k < 2) throw std::invalid_argument("round robin needs k >= 2");
    if (k > kMaxConstructionProcesses) throw std::invalid_argument("round robin: k too large");
    if (!init.uniform && (init.process < 1 || init.process > k))
        throw std::invalid_argument("initial process " + std::to_string(init.process) + " out of range 1.." +
                                    std::to_string(k));
    // wait<j> is state j-1, grant<j> is state k+j-1.
    std::vector<std::string> names;
    for (std::size_t j = 1; j <= k; ++j) names.push_back("wait" + std::to_string(j));
    for (std::size_t j = 1; j <= k; ++j) names.push_back("grant" + std::to_string(j));
    Transducer t(k, names);
    auto wait = [](std::size_t j) { return static_cast<StateId>(j - 1); };
    auto grant = [k](std::size_t j) { return static_cast<StateId>(k + j - 1); };
    for (std::size_t j = 1; j <= k; ++j) t.set_label(grant(j), Letter{1} << (j - 1));

    for (std::size_t j = 1; j <= k; ++j) {
        const std::size_t next = j % k + 1;
        for (StateId s : {wait(j), grant(j)})
            for (Letter i = 0; i < letter_count(k); ++i) {
                bool requested = (i >> (next - 1)) & 1U;
                t.set_transition(s, i, Distribution::dirac(requested ? grant(next) : wait(next)));
            }
    }
    if (init.uniform) {
        std::vector<StateId> waits;
        for (std::size_t j = 1; j <= k; ++j) waits.push_back(wait(j));
        t.set_initial(Distribution::uniform(waits));
    } else {
        // The state that listens to process j has just served j-1.
        std::size_t served = init.process == 1 ? k : init.process - 1;
        t.set_initial(Distribution::dirac(wait(served)));
    }
    return t;
}

}  // namespace psym
