#pragma once

#include "braidrep.hpp"
#include "certify.hpp"
#include "characters.hpp"
#include "exact.hpp"
#include "partitions.hpp"
#include "reidemeister.hpp"
#include "serialize.hpp"
#include "stembridge.hpp"
#include "symgrp.hpp"
