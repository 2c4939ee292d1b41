// Generated by tests/oracle/gen_bls_constants.py. Do not edit.
#pragma once

#include <array>
#include <cstdint>

namespace nimsa::crypto::bls12_381 {
using Limbs6 = std::array<std::uint64_t, 6>;
using Limbs4 = std::array<std::uint64_t, 4>;
using Limbs2x6 = std::array<Limbs6, 2>;

inline constexpr Limbs6 kModulusP = {0xb9feffffffffaaabULL, 0x1eabfffeb153ffffULL, 0x6730d2a0f6b0f624ULL, 0x64774b84f38512bfULL, 0x4b1ba7b6434bacd7ULL, 0x1a0111ea397fe69aULL};
inline constexpr Limbs4 kOrderR = {0xffffffff00000001ULL, 0x53bda402fffe5bfeULL, 0x3339d80809a1d805ULL, 0x73eda753299d7d48ULL};
inline constexpr std::array<std::uint64_t, 10> kG2CofactorEff = {0xe8020005aaa95551ULL, 0x59894c0adebbf6b4ULL, 0xe954cbc06689f6a3ULL, 0x2ec0ec69d7477c1aULL, 0x6d82bf015d1212b0ULL, 0x329c2f178731db95ULL, 0x9986ff031508ffe1ULL, 0x88e2a8e9145ad768ULL, 0x584c6a0ea91b3528ULL, 0x0bc69f08f2ee75b3ULL};

inline constexpr Limbs6 kG1GenX = {0xfb3af00adb22c6bbULL, 0x6c55e83ff97a1aefULL, 0xa14e3a3f171bac58ULL, 0xc3688c4f9774b905ULL, 0x2695638c4fa9ac0fULL, 0x17f1d3a73197d794ULL};
inline constexpr Limbs6 kG1GenY = {0x0caa232946c5e7e1ULL, 0xd03cc744a2888ae4ULL, 0x00db18cb2c04b3edULL, 0xfcf5e095d5d00af6ULL, 0xa09e30ed741d8ae4ULL, 0x08b3f481e3aaa0f1ULL};
inline constexpr Limbs2x6 kG2GenX = {{{0xd48056c8c121bdb8ULL, 0x0bac0326a805bbefULL, 0xb4510b647ae3d177ULL, 0xc6e47ad4fa403b02ULL, 0x260805272dc51051ULL, 0x024aa2b2f08f0a91ULL}, {0xe5ac7d055d042b7eULL, 0x334cf11213945d57ULL, 0xb5da61bbdc7f5049ULL, 0x596bd0d09920b61aULL, 0x7dacd3a088274f65ULL, 0x13e02b6052719f60ULL}}};
inline constexpr Limbs2x6 kG2GenY = {{{0xe193548608b82801ULL, 0x923ac9cc3baca289ULL, 0x6d429a695160d12cULL, 0xadfd9baa8cbdd3a7ULL, 0x8cc9cdc6da2e351aULL, 0x0ce5d527727d6e11ULL}, {0xaaa9075ff05f79beULL, 0x3f370d275cec1da1ULL, 0x267492ab572e99abULL, 0xcb3e287e85a763afULL, 0x32acd2b02bc28b99ULL, 0x0606c4a02ea734ccULL}}};

// Simplified SWU on the 11-isogenous curve E1': y^2 = x^3 + A'x + B'
inline constexpr Limbs6 kIso11A = {0x5cf428082d584c1dULL, 0x98936f8da0e0f97fULL, 0xd8e8981aefd881acULL, 0xb0ea985383ee66a8ULL, 0x3d693a02c96d4982ULL, 0x00144698a3b8e943ULL};
inline constexpr Limbs6 kIso11B = {0xd1cc48e98e172be0ULL, 0x5a23215a316ceaa5ULL, 0xa0b9c14fcef35ef5ULL, 0x2016c1f0f24f4070ULL, 0x018b12e8753eee3bULL, 0x12e2908d11688030ULL};
inline constexpr Limbs6 kIso11Z = {0x000000000000000bULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL};
inline constexpr std::array<Limbs6, 12> kIso11XNum = {{
    {0xaeac1662734649b7ULL, 0x5610c2d5f2e62d6eULL, 0xf2627b56cdb4e2c8ULL, 0x6b303e88a2d7005fULL, 0xb809101dd9981585ULL, 0x11a05f2b1e833340ULL},
    {0xe834eef1b3cb83bbULL, 0x4838f2a6f318c356ULL, 0xf565e33c70d1e86bULL, 0x7c17e75b2f6a8417ULL, 0x0588bab22147a81cULL, 0x17294ed3e943ab2fULL},
    {0xe0179f9dac9edcb0ULL, 0x958c3e3d2a09729fULL, 0x6878e501ec68e25cULL, 0xce032473295983e5ULL, 0x1d1048c5d10a9a1bULL, 0x0d54005db97678ecULL},
    {0xc5b388641d9b6861ULL, 0x5336e25ce3107193ULL, 0xf1b33289f1b33083ULL, 0xd7f5e4656a8dbf25ULL, 0x4e0609d307e55412ULL, 0x1778e7166fcc6db7ULL},
    {0x51154ce9ac8895d9ULL, 0x985a286f301e77c4ULL, 0x086eeb65982fac18ULL, 0x99db995a1257fb3fULL, 0x6642b4b3e4118e54ULL, 0x0e99726a3199f443ULL},
    {0xcd13c1c66f652983ULL, 0xa0870d2dcae73d19ULL, 0x9ed3ab9097e68f90ULL, 0xdb3cb17dd952799bULL, 0x01d1201bf7a74ab5ULL, 0x1630c3250d7313ffULL},
    {0xddd7f225a139ed84ULL, 0x8da25128c1052ecaULL, 0x9008e218f9c86b2aULL, 0xb11586264f0f8ce1ULL, 0x6a3726c38ae652bfULL, 0x0d6ed6553fe44d29ULL},
    {0x9ccb5618e3f0c88eULL, 0x39b7c8f8c8f475afULL, 0xa682c62ef0f27533ULL, 0x356de5ab275b4db1ULL, 0xe8743884d1117e53ULL, 0x17b81e7701abdbe2ULL},
    {0x6d71986a8497e317ULL, 0x4fa295f296b74e95ULL, 0xa2c596c928c5d1deULL, 0xc43b756ce79f5574ULL, 0x7b90b33563be990dULL, 0x080d3cf1f9a78fc4ULL},
    {0x7f241067be390c9eULL, 0xa3190b2edc032779ULL, 0x676314baf4bb1b7fULL, 0xdd2ecb803a0c5c99ULL, 0x2e0c37515d138f22ULL, 0x169b1f8e1bcfa7c4ULL},
    {0xca67df3f1605fb7bULL, 0xf69b771f8c285decULL, 0xd50af36003b14866ULL, 0xfa7dccdde6787f96ULL, 0x72d8ec09d2565b0dULL, 0x10321da079ce07e2ULL},
    {0xa9c8ba2e8ba2d229ULL, 0xc24b1b80b64d391fULL, 0x23c0bf1bc24c6b68ULL, 0x31d79d7e22c837bcULL, 0xbd1e962381edee3dULL, 0x06e08c248e260e70ULL}}};
inline constexpr std::array<Limbs6, 11> kIso11XDen = {{
    {0x993cf9fa40d21b1cULL, 0xb558d681be343df8ULL, 0x9c9588617fc8ac62ULL, 0x01d5ef4ba35b48baULL, 0x18b2e62f4bd3fa6fULL, 0x08ca8d548cff19aeULL},
    {0xe5c8276ec82b3bffULL, 0x13daa8846cb026e9ULL, 0x0126c2588c48bf57ULL, 0x7041e8ca0cf0800cULL, 0x48b4711298e53636ULL, 0x12561a5deb559c43ULL},
    {0xfcc239ba5cb83e19ULL, 0xd6a3d0967c94fedcULL, 0xfca64e00b11aceacULL, 0x6f89416f5a718cd1ULL, 0x8137e629bff2991fULL, 0x0b2962fe57a3225eULL},
    {0x130de8938dc62cd8ULL, 0x4976d5243eecf5c4ULL, 0x54cca8abc28d6fd0ULL, 0x5b08243f16b16551ULL, 0xc83aafef7c40eb54ULL, 0x03425581a58ae2feULL},
    {0x539d395b3532a21eULL, 0x9bd29ba81f35781dULL, 0x8d6b44e833b306daULL, 0xffdfc759a12062bbULL, 0x0a6f1d5f43e7a07dULL, 0x13a8e162022914a8ULL},
    {0xc02df9a29f6304a5ULL, 0x7400d24bc4228f11ULL, 0x0a43bcef24b8982fULL, 0x395735e9ce9cad4dULL, 0x55390f7f0506c6e9ULL, 0x0e7355f8e4e667b9ULL},
    {0xec2574496ee84a3aULL, 0xea73b3538f0de06cULL, 0x4e2e073062aede9cULL, 0x570f5799af53a189ULL, 0x0f3e0c63e0596721ULL, 0x0772caacf1693619ULL},
    {0x11f7d99bbdcc5a5eULL, 0x0fa5b9489d11e2d3ULL, 0x1996e1cdf9822c58ULL, 0x6e7f63c21bca68a8ULL, 0x30b3f5b074cf0199ULL, 0x14a7ac2a9d64a8b2ULL},
    {0x4776ec3a79a1d641ULL, 0x03826692abba4370ULL, 0x74100da67f398835ULL, 0xe07f8d1d7161366bULL, 0x5e920b3dafc7a3ccULL, 0x0a10ecf6ada54f82ULL},
    {0x2d6384d168ecdd0aULL, 0x93174e4b4b786500ULL, 0x76df533978f31c15ULL, 0xf682b4ee96f7d037ULL, 0x476d6e3eb3a56680ULL, 0x095fc13ab9e92ad4ULL},
    {0x0000000000000001ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL}}};
inline constexpr std::array<Limbs6, 16> kIso11YNum = {{
    {0xbe9845719707bb33ULL, 0xcd0c7aee9b3ba3c2ULL, 0x2b52af6c956543d3ULL, 0x11ad138e48a86952ULL, 0x259d1f094980dcfaULL, 0x090d97c81ba24ee0ULL},
    {0xe097e75a2e41c696ULL, 0xd6c56711962fa8bfULL, 0x0f906343eb67ad34ULL, 0x1223e96c254f383dULL, 0xd51036d776fb4683ULL, 0x134996a104ee5811ULL},
    {0xb8dfe240c72de1f6ULL, 0xd26d521628b00523ULL, 0xc344be4b91400da7ULL, 0x2552e2d658a31ce2ULL, 0xf4a384c86a3b4994ULL, 0x00cc786baa966e66ULL},
    {0xa6355c77b0e5f4cbULL, 0xde405aba9ec61decULL, 0x09e4a3ec03251cf9ULL, 0xd42aa7b90eeb791cULL, 0x7898751ad8746757ULL, 0x01f86376e8981c21ULL},
    {0x41b6daecf2e8fedbULL, 0x2ee7f8dc099040a8ULL, 0x79833fd221351adcULL, 0x195536fbe3ce50b8ULL, 0x5caf4fe2a21529c4ULL, 0x08cc03fdefe0ff13ULL},
    {0x99b23ab13633a5f0ULL, 0x203f6326c95a8072ULL, 0x76505c3d3ad5544eULL, 0x74a7d0d4afadb7bdULL, 0x2211e11db8f0a6a0ULL, 0x16603fca40634b6aULL},
    {0xc961f8855fe9d6f2ULL, 0x47a87ac2460f415eULL, 0x5231413c4d634f37ULL, 0xe75bb8ca2be184cbULL, 0xb2c977d027796b3cULL, 0x04ab0b9bcfac1bbcULL},
    {0xa15e4ca31870fb29ULL, 0x42f64550fedfe935ULL, 0xfd038da6c26c8426ULL, 0x170a05bfe3bdd81fULL, 0xde9926bd2ca6c674ULL, 0x0987c8d5333ab86fULL},
    {0x60370e577bdba587ULL, 0x69d65201c78607a3ULL, 0x1e8b6e6a1f20cabeULL, 0x8f3abd16679dc26cULL, 0xe88c9e221e4da1bbULL, 0x09fc4018bd96684bULL},
    {0x2bafaaebca731c30ULL, 0x9b3f7055dd4eba6fULL, 0x06985e7ed1e4d43bULL, 0xc42a0ca7915af6feULL, 0x223abde7ada14a23ULL, 0x0e1bba7a1186bdb5ULL},
    {0xe813711ad011c132ULL, 0x31bf3a5cce3fbafcULL, 0xd1183e416389e610ULL, 0xcd2fcbcb6caf493fULL, 0x0dfd0b8f1d43fb93ULL, 0x19713e47937cd1beULL},
    {0xce07c8a4d0074d8eULL, 0x49d9cdf41b44d606ULL, 0x2e6bfe7f911f6432ULL, 0x523559b8aaf0c246ULL, 0xb918c143fed2edccULL, 0x18b46a908f36f6deULL},
    {0x0d4c04f00b971ef8ULL, 0x06c851c1919211f2ULL, 0xc02710e807b4633fULL, 0x7aa7b12a3426b08eULL, 0xd155096004f53f44ULL, 0x0b182cac101b9399ULL},
    {0x42d9d3f5db980133ULL, 0xc6cf90ad1c232a64ULL, 0x13e6632d3c40659cULL, 0x757b3b080d4c1580ULL, 0x72fc00ae7be315dcULL, 0x0245a394ad1eca9bULL},
    {0x866b1e715475224bULL, 0x6ba1049b6579afb7ULL, 0xd9ab0f5d396a7ce4ULL, 0x5e673d81d7e86568ULL, 0x02a159f748c4a3fcULL, 0x05c129645e44cf11ULL},
    {0x04b456be69c8b604ULL, 0xb665027efec01c77ULL, 0x57add4fa95af01b2ULL, 0xcb181d8f84965a39ULL, 0x4ea50b3b42df2eb5ULL, 0x15e6be4e990f03ceULL}}};
inline constexpr std::array<Limbs6, 16> kIso11YDen = {{
    {0x01479253b03663c1ULL, 0x07f3688ef60c206dULL, 0xeec3232b5be72e7aULL, 0x601a6de578980be6ULL, 0x52181140fad0eae9ULL, 0x16112c4c3a9c98b2ULL},
    {0x32f6102c2e49a03dULL, 0x78a4260763529e35ULL, 0xa4a10356f453e01fULL, 0x85c84ff731c4d59cULL, 0x1a0cbd6c43c348b8ULL, 0x1962d75c2381201eULL},
    {0x1e2538b53dbf67f2ULL, 0xa6757cd636f96f89ULL, 0x0c35a5dd279cd2ecULL, 0x78c4855551ae7f31ULL, 0x6faaae7d6e8eb157ULL, 0x058df3306640da27ULL},
    {0xa8d26d98445f5416ULL, 0x727364f2c28297adULL, 0x123da489e726af41ULL, 0xd115c5dbddbcd30eULL, 0xf20d23bf89edb4d1ULL, 0x16b7d288798e5395ULL},
    {0xda39142311a5001dULL, 0xa20b15dc0fd2ededULL, 0x542eda0fc9dec916ULL, 0xc6d19c9f0f69bbb0ULL, 0xb00cc912f8228ddcULL, 0x0be0e079545f43e4ULL},
    {0x02c6477faaf9b7acULL, 0x49f38db9dfa9cce2ULL, 0xc5ecd87b6f0f5a64ULL, 0xb70152c65550d881ULL, 0x9fb266eaac783182ULL, 0x08d9e5297186db2dULL},
    {0x3d1a1399126a775cULL, 0xd5fa9c01a58b1fb9ULL, 0x5dd365bc400a0051ULL, 0x5eecfdfa8d0cf8efULL, 0xc3ba8734ace9824bULL, 0x166007c08a99db2fULL},
    {0x60ee415a15812ed9ULL, 0xb920f5b00801dee4ULL, 0xfeb34fd206357132ULL, 0xe5a4375efa1f4fd7ULL, 0x03bcddfabba6ff6eULL, 0x16a3ef08be3ea7eaULL},
    {0x6b233d9d55535d4aULL, 0x52cfe2f7bb924883ULL, 0xabc5750c4bf39b48ULL, 0xf9fb0ce4c6af5920ULL, 0x1a1be54fd1d74cc4ULL, 0x1866c8ed336c6123ULL},
    {0x346ef48bb8913f55ULL, 0xc7385ea3d529b35eULL, 0x5308592e7ea7d4fbULL, 0x3216f763e13d87bbULL, 0xea820597d94a8490ULL, 0x167a55cda70a6e1cULL},
    {0x00f8b49cba8f6aa8ULL, 0x71a5c29f4f830604ULL, 0x0e591b36e636a5c8ULL, 0x9c6dd039bb61a629ULL, 0x48f010a01ad2911dULL, 0x04d2f259eea405bdULL},
    {0x9684b529e2561092ULL, 0x16f968986f7ebbeaULL, 0x8c0f9a88cea79135ULL, 0x7f94ff8aefce42d2ULL, 0xf5852c1e48c50c47ULL, 0x0accbb67481d033fULL},
    {0x1e99b138573345ccULL, 0x93000763e3b90ac1ULL, 0x7d5ceef9a00d9b86ULL, 0x543346d98adf0226ULL, 0xc3613144b45f1496ULL, 0x0ad6b9514c767fe3ULL},
    {0xd1fadc1326ed06f7ULL, 0x420517bd8714cc80ULL, 0xcb748df27942480eULL, 0xbf565b94e72927c1ULL, 0x628bdd0d53cd76f2ULL, 0x02660400eb2e4f3bULL},
    {0x4415473a1d634b8fULL, 0x5ca2f570f1349780ULL, 0x324efcd6356caa20ULL, 0x71c40f65e273b853ULL, 0x6b24255e0d7819c1ULL, 0x0e0fa1d816ddc03eULL},
    {0x0000000000000001ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL}}};

// Simplified SWU on the 3-isogenous twist E2': y^2 = x^3 + A'x + B'
inline constexpr Limbs2x6 kIso3A = {{{0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL}, {0x00000000000000f0ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL}}};
inline constexpr Limbs2x6 kIso3B = {{{0x00000000000003f4ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL}, {0x00000000000003f4ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL}}};
inline constexpr Limbs2x6 kIso3Z = {{{0xb9feffffffffaaa9ULL, 0x1eabfffeb153ffffULL, 0x6730d2a0f6b0f624ULL, 0x64774b84f38512bfULL, 0x4b1ba7b6434bacd7ULL, 0x1a0111ea397fe69aULL}, {0xb9feffffffffaaaaULL, 0x1eabfffeb153ffffULL, 0x6730d2a0f6b0f624ULL, 0x64774b84f38512bfULL, 0x4b1ba7b6434bacd7ULL, 0x1a0111ea397fe69aULL}}};
inline constexpr std::array<Limbs2x6, 4> kIso3XNum = {{
    {{{0x6238aaaaaaaa97d6ULL, 0x5c2638e343d9c71cULL, 0x88b58423c50ae15dULL, 0x32c52d39fd3a042aULL, 0xbb5b7a9a47d7ed85ULL, 0x05c759507e8e333eULL}, {0x6238aaaaaaaa97d6ULL, 0x5c2638e343d9c71cULL, 0x88b58423c50ae15dULL, 0x32c52d39fd3a042aULL, 0xbb5b7a9a47d7ed85ULL, 0x05c759507e8e333eULL}}},
    {{{0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL}, {0x26a9ffffffffc71aULL, 0x1472aaa9cb8d5555ULL, 0x9a208c6b4f20a418ULL, 0x984f87adf7ae0c7fULL, 0x32126fced787c88fULL, 0x11560bf17baa99bcULL}}},
    {{{0x26a9ffffffffc71eULL, 0x1472aaa9cb8d5555ULL, 0x9a208c6b4f20a418ULL, 0x984f87adf7ae0c7fULL, 0x32126fced787c88fULL, 0x11560bf17baa99bcULL}, {0x9354ffffffffe38dULL, 0x0a395554e5c6aaaaULL, 0xcd104635a790520cULL, 0xcc27c3d6fbd7063fULL, 0x190937e76bc3e447ULL, 0x08ab05f8bdd54cdeULL}}},
    {{{0x88e2aaaaaaaa5ed1ULL, 0x7098e38d0f671c71ULL, 0x22d6108f142b8575ULL, 0xcb14b4e7f4e810aaULL, 0xed6dea691f5fb614ULL, 0x171d6541fa38ccfaULL}, {0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL}}}}};
inline constexpr std::array<Limbs2x6, 4> kIso3XDen = {{
    {{{0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL}, {0xb9feffffffffaa63ULL, 0x1eabfffeb153ffffULL, 0x6730d2a0f6b0f624ULL, 0x64774b84f38512bfULL, 0x4b1ba7b6434bacd7ULL, 0x1a0111ea397fe69aULL}}},
    {{{0x000000000000000cULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL}, {0xb9feffffffffaa9fULL, 0x1eabfffeb153ffffULL, 0x6730d2a0f6b0f624ULL, 0x64774b84f38512bfULL, 0x4b1ba7b6434bacd7ULL, 0x1a0111ea397fe69aULL}}},
    {{{0x0000000000000001ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL}, {0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL}}},
    {{{0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL}, {0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL}}}}};
inline constexpr std::array<Limbs2x6, 4> kIso3YNum = {{
    {{{0x12cfc71c71c6d706ULL, 0xfc8c25ebf8c92f68ULL, 0xf54439d87d27e500ULL, 0x0f7da5d4a07f649bULL, 0x59a4c18b076d1193ULL, 0x1530477c7ab4113bULL}, {0x12cfc71c71c6d706ULL, 0xfc8c25ebf8c92f68ULL, 0xf54439d87d27e500ULL, 0x0f7da5d4a07f649bULL, 0x59a4c18b076d1193ULL, 0x1530477c7ab4113bULL}}},
    {{{0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL}, {0x6238aaaaaaaa97beULL, 0x5c2638e343d9c71cULL, 0x88b58423c50ae15dULL, 0x32c52d39fd3a042aULL, 0xbb5b7a9a47d7ed85ULL, 0x05c759507e8e333eULL}}},
    {{{0x26a9ffffffffc71cULL, 0x1472aaa9cb8d5555ULL, 0x9a208c6b4f20a418ULL, 0x984f87adf7ae0c7fULL, 0x32126fced787c88fULL, 0x11560bf17baa99bcULL}, {0x9354ffffffffe38fULL, 0x0a395554e5c6aaaaULL, 0xcd104635a790520cULL, 0xcc27c3d6fbd7063fULL, 0x190937e76bc3e447ULL, 0x08ab05f8bdd54cdeULL}}},
    {{{0xe1b371c71c718b10ULL, 0x4e79097a56dc4bd9ULL, 0xb0e977c69aa27452ULL, 0x761b0f37a1e26286ULL, 0xfbf7043de3811ad0ULL, 0x124c9ad43b6cf79bULL}, {0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL}}}}};
inline constexpr std::array<Limbs2x6, 4> kIso3YDen = {{
    {{{0xb9feffffffffa8fbULL, 0x1eabfffeb153ffffULL, 0x6730d2a0f6b0f624ULL, 0x64774b84f38512bfULL, 0x4b1ba7b6434bacd7ULL, 0x1a0111ea397fe69aULL}, {0xb9feffffffffa8fbULL, 0x1eabfffeb153ffffULL, 0x6730d2a0f6b0f624ULL, 0x64774b84f38512bfULL, 0x4b1ba7b6434bacd7ULL, 0x1a0111ea397fe69aULL}}},
    {{{0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL}, {0xb9feffffffffa9d3ULL, 0x1eabfffeb153ffffULL, 0x6730d2a0f6b0f624ULL, 0x64774b84f38512bfULL, 0x4b1ba7b6434bacd7ULL, 0x1a0111ea397fe69aULL}}},
    {{{0x0000000000000012ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL}, {0xb9feffffffffaa99ULL, 0x1eabfffeb153ffffULL, 0x6730d2a0f6b0f624ULL, 0x64774b84f38512bfULL, 0x4b1ba7b6434bacd7ULL, 0x1a0111ea397fe69aULL}}},
    {{{0x0000000000000001ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL}, {0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL, 0x0000000000000000ULL}}}}};

}  // namespace nimsa::crypto::bls12_381
