# -*- coding: utf-8 -*-
"""
src package for the neutrosophic min-plus / max-plus algebra.
"""
