#pragma once

namespace sonseq {

inline constexpr const char* artifact_name = "sonseq";
inline constexpr const char* artifact_version = "1.0.0";

} // namespace sonseq
