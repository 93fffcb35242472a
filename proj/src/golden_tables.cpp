// Generated by tools/gen_golden.py from data/*.csv. Do not edit.
#include "twistcs/golden_tables.hpp"

namespace twistcs::golden {

const OrbifoldRow kOrbifoldTable[] = {
    {-9, 3, 0.0126607, 0.0379822},
    {-9, 4, 0.130503, 0.522012},
    {-9, 5, 0.00795573, 0.0397786},
    {-9, 6, 0.0957144, 0.574286},
    {-9, 7, 0.0169085, 0.118359},
    {-9, 8, 0.0835496, 0.668397},
    {-9, 9, 0.0247059, 0.222353},
    {-9, 10, 0.0779144, 0.779144},
    {-8, 3, 0.00545933, 0.016378},
    {-8, 4, 0.123196, 0.492785},
    {-8, 5, 0.00062685, 0.00313425},
    {-8, 6, 0.0883767, 0.53026},
    {-8, 7, 0.00956397, 0.0669478},
    {-8, 8, 0.0762009, 0.609607},
    {-8, 9, 0.0173633, 0.15627},
    {-8, 10, 0.0705667, 0.705667},
    {-7, 3, 0.162874, 0.488621},
    {-7, 4, 0.113753, 0.455011},
    {-7, 5, 0.0911448, 0.455724},
    {-7, 6, 0.0788794, 0.473276},
    {-7, 7, 5.89596e-05, 0.000412717},
    {-7, 8, 0.0666914, 0.533532},
    {-7, 9, 0.0078478, 0.0706302},
    {-7, 10, 0.0610519, 0.610519},
    {-6, 3, 0.150597, 0.451792},
    {-6, 4, 0.101087, 0.404347},
    {-6, 5, 0.0784041, 0.39202},
    {-6, 6, 0.0661095, 0.396657},
    {-6, 7, 0.0587029, 0.41092},
    {-6, 8, 0.0538979, 0.431183},
    {-6, 9, 0.0506045, 0.455441},
    {-6, 10, 0.0482492, 0.482492},
    {-5, 3, 0.133696, 0.401087},
    {-5, 4, 0.0832469, 0.332988},
    {-5, 5, 0.0603968, 0.301984},
    {-5, 6, 0.0480386, 0.288232},
    {-5, 7, 0.0405999, 0.2842},
    {-5, 8, 0.0357763, 0.28621},
    {-5, 9, 0.032471, 0.292239},
    {-5, 10, 0.0301075, 0.301075},
    {-4, 3, 0.109659, 0.328978},
    {-4, 4, 0.0564153, 0.225661},
    {-4, 5, 0.0330919, 0.16546},
    {-4, 6, 0.020561, 0.123366},
    {-4, 7, 0.0130371, 0.0912595},
    {-4, 8, 0.00816423, 0.0653138},
    {-4, 9, 0.00482762, 0.0434486},
    {-4, 10, 0.00244289, 0.0244289},
    {-3, 3, 0.0749433, 0.22483},
    {-3, 4, 0.0126376, 0.0505506},
    {-3, 5, 0.0873477, 0.436738},
    {-3, 6, 0.140792, 0.844753},
    {-3, 7, 0.0376998, 0.263898},
    {-3, 8, 0.0862114, 0.689691},
    {-3, 9, 0.013313, 0.119817},
    {-3, 10, 0.0552937, 0.552937},
    {-2, 3, 0.0200144, 0.0600431},
    {-2, 4, 0.186811, 0.747246},
    {-2, 5, 0.00166667, 0.00833333},
    {-2, 6, 0.0504622, 0.302773},
    {-2, 7, 0.0163442, 0.11441},
    {-2, 8, 0.11699, 0.935921},
    {-2, 9, 0.0292902, 0.263612},
    {-2, 10, 0.0595432, 0.595432},
    {2, 3, 0.0875301, 0.26259},
    {2, 4, 0.144925, 0.579699},
    {2, 5, 0.0784576, 0.392288},
    {2, 6, 0.0351571, 0.210943},
    {2, 7, 0.00506505, 0.0354553},
    {2, 8, 0.108039, 0.864313},
    {2, 9, 0.0218112, 0.196301},
    {2, 10, 0.0530574, 0.530574},
    {3, 3, 0.0449535, 0.13486},
    {3, 4, 0.0876043, 0.350417},
    {3, 5, 0.0165337, 0.0826684},
    {3, 6, 0.138167, 0.829004},
    {3, 7, 0.0120078, 0.0840545},
    {3, 8, 0.0430876, 0.3447},
    {3, 9, 0.012125, 0.109125},
    {3, 10, 0.0876213, 0.876213},
    {4, 3, 0.0161266, 0.0483799},
    {4, 4, 0.0536832, 0.214733},
    {4, 5, 0.0817026, 0.408513},
    {4, 6, 0.103012, 0.618074},
    {4, 7, 0.0481239, 0.336867},
    {4, 8, 0.00768503, 0.0614802},
    {4, 9, 0.032221, 0.289989},
    {4, 10, 0.0521232, 0.521232},
    {5, 3, 0.162697, 0.488091},
    {5, 4, 0.0320099, 0.12804},
    {5, 5, 0.059758, 0.29879},
    {5, 6, 0.0809665, 0.485799},
    {5, 7, 0.0260276, 0.182193},
    {5, 8, 0.110559, 0.884475},
    {5, 9, 0.0100766, 0.0906893},
    {5, 10, 0.029966, 0.29966},
    {6, 3, 0.14836, 0.445081},
    {6, 4, 0.0170833, 0.0683334},
    {6, 5, 0.0447221, 0.22361},
    {6, 6, 0.0658884, 0.39533},
    {6, 7, 0.0109281, 0.0764969},
    {6, 8, 0.0954474, 0.763579},
    {6, 9, 0.0505121, 0.454609},
    {6, 10, 0.0148406, 0.148406},
    {7, 3, 0.13775, 0.413249},
    {7, 4, 0.00620422, 0.0248169},
    {7, 5, 0.03379, 0.16895},
    {7, 6, 0.0549355, 0.329613},
    {7, 7, 0.0713932, 0.499752},
    {7, 8, 0.0844779, 0.675823},
    {7, 9, 0.0395376, 0.355839},
    {7, 10, 0.00386414, 0.0386414},
    {8, 3, 0.129617, 0.38885},
    {8, 4, 0.247931, 0.991725},
    {8, 5, 0.025488, 0.12744},
    {8, 6, 0.0466221, 0.279733},
    {8, 7, 0.0630741, 0.441518},
    {8, 8, 0.0761526, 0.609221},
    {8, 9, 0.0312096, 0.280887},
    {8, 10, 0.0955375, 0.955375},
    {9, 3, 0.123198, 0.369593},
    {9, 4, 0.241431, 0.965725},
    {9, 5, 0.0189709, 0.0948543},
    {9, 6, 0.0400981, 0.240588},
    {9, 7, 0.0565432, 0.395803},
    {9, 8, 0.0696194, 0.556955},
    {9, 9, 0.0246862, 0.222176},
    {9, 10, 0.0890057, 0.890057},
};
const std::size_t kOrbifoldTableSize = sizeof(kOrbifoldTable) / sizeof(kOrbifoldTable[0]);

const CuspedRow kCuspedTable[] = {
    {-9, 2.99694, 0.0679043},
    {-8, 2.97825, 0.0605519},
    {-7, 2.95401, 0.0510293},
    {-6, 2.9213, 0.0382117},
    {-5, 2.87475, 0.0200385},
    {-4, 2.80318, 0.492293},
    {-3, 2.67879, 0.444846},
    {-2, 2.40717, 0.346796},
    {2, 2.57414, 0.344023},
    {3, 2.75069, 0.277867},
    {4, 2.84321, 0.242222},
    {5, 2.90026, 0.220016},
    {6, 2.93897, 0.204869},
    {7, 2.96697, 0.193882},
    {8, 2.98817, 0.18555},
    {9, 3.00477, 0.179014},
};
const std::size_t kCuspedTableSize = sizeof(kCuspedTable) / sizeof(kCuspedTable[0]);

}  // namespace twistcs::golden
