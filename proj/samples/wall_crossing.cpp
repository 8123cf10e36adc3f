// Walks every wall of a weight matrix and prints the crossing data.
//
//   sample_wall_crossing samples/p2xp2.json

#include <iostream>

#include "vgit/discriminant.hpp"
#include "vgit/report.hpp"

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: " << argv[0] << " INPUT\n";
        return 1;
    }
    try {
        vgit::LoadedInput in = vgit::loadInput(argv[1]);
        const vgit::WeightMatrix& w = in.weights;
        vgit::GKZFan fan = vgit::buildFan(w);

        for (std::size_t k = 0; k < fan.wallCount(); ++k) {
            vgit::BalancedWallReport rep = vgit::wallCrossing(w, fan, k);
            vgit::WallIntersection wi = vgit::wallIntersectionLength(fan, k);
            std::cout << "wall " << k << " ray " << rep.ray << ": " << vgit::chamberLabel(rep.chamberMinus) << " -> "
                      << vgit::chamberLabel(rep.chamberPlus) << "\n"
                      << "  flipped " << rep.flippedMinus().lambda << " / " << rep.flippedPlus().lambda
                      << ", Z = " << vgit::renderCoordSet(w, rep.sharedZ) << ", eta = " << rep.eta
                      << (rep.balanced ? ", balanced" : ", not balanced") << "\n"
                      << "  discriminant length " << wi.total << (wi.applicable ? "" : " (formula inapplicable)")
                      << "\n";
        }
        std::cout << "x^(1,0) pulls back to " << vgit::formatRational(vgit::hornPullback(fan, {1, 0})) << "\n";
    } catch (const vgit::Error& e) {
        std::cerr << e.what() << "\n";
        return vgit::exitCodeFor(e.kind());
    }
}
