#ifndef WALG_VERSION_HPP
#define WALG_VERSION_HPP

namespace walg {

inline constexpr const char* kToolName = "walg";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

}  // namespace walg

#endif
