#pragma once

namespace novpot {

// Bundled configuration documents, embedded at build time from fixtures/.
const char* fixture_cp2_semitoric();
const char* fixture_cp2_standard_toric();
const char* fixture_s2s2_semitoric();

}  // namespace novpot
